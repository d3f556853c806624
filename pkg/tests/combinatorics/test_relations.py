import pytest
from facewise.catalog import six_element_poset
from facewise.combinatorics import (
    all_enumerations,
    classify,
    count_relation_classes,
    enumerate_relations,
    galois_enums_to_relation,
    halfspace_set,
    hasse,
    height_of,
    is_contraction,
    is_poset_based,
    linear_extensions,
    poset_dimension,
    precedes_closure,
    preposet_closure,
    toset_of,
    transitive_closure,
)
from facewise.data_models import EnumSet, Enumeration, GroundSet, Relation
from facewise.exceptions import GuardExceededError, NotPosetError, NotPreposetError

ABC = GroundSet.of_size(3)
AB = GroundSet.of_size(2)


def rel(ground, *pairs):
    return Relation.from_label_pairs(ground, pairs)


def with_diagonal(relation):
    return relation | Relation.diagonal(relation.ground)


def test_transitive_closure():
    assert transitive_closure(Relation.diagonal(ABC)) == Relation.diagonal(ABC)
    assert transitive_closure(rel(ABC, ("a", "b"), ("b", "c"))) == rel(ABC, ("a", "b"), ("b", "c"), ("a", "c"))
    assert transitive_closure(rel(ABC, ("a", "b"), ("b", "a"))) == rel(ABC, ("a", "b"), ("b", "a"), ("a", "a"), ("b", "b"))


def test_classify():
    flags = classify(Relation.diagonal(ABC))
    assert flags.is_poset and flags.is_preposet and not flags.is_toset
    assert classify(toset_of(Enumeration.parse(ABC, "|a|b|c|"))).is_toset
    full = classify(Relation.full(AB))
    assert full.is_preposet and not full.is_poset and not full.acyclic_offdiagonal


def test_closures():
    assert preposet_closure(Relation.empty(ABC)) == Relation.diagonal(ABC)
    assert precedes_closure(rel(ABC, ("a", "b"), ("b", "a"))) == Relation.full(ABC)
    assert precedes_closure(rel(ABC, ("a", "b"))) == with_diagonal(rel(ABC, ("a", "b")))


def test_precedes_closure_is_a_closure_operator():
    relations = list(enumerate_relations(ABC))
    for relation in relations:
        closed = precedes_closure(relation)
        assert relation <= closed
        assert precedes_closure(closed) == closed
    for small in relations[::7]:
        for large in relations[::5]:
            if small <= large:
                assert precedes_closure(small) <= precedes_closure(large)


def test_toset_and_galois_connection():
    pi = Enumeration.parse(ABC, "|c|b|a|")
    assert toset_of(pi) == with_diagonal(rel(ABC, ("c", "b"), ("c", "a"), ("b", "a")))
    assert galois_enums_to_relation(EnumSet.of(ABC, [pi])) == toset_of(pi)
    assert galois_enums_to_relation(all_enumerations(ABC)) == Relation.diagonal(ABC)
    assert galois_enums_to_relation(EnumSet.empty(ABC)) == Relation.full(ABC)


def test_galois_pair_is_antitone():
    orders = sorted(EnumSet.everything(ABC).orders)
    relations = list(enumerate_relations(ABC))
    extensions = {relation: linear_extensions(relation) for relation in relations}
    for choice in range(0, 1 << len(orders), 3):
        s = EnumSet(ABC, frozenset(order for i, order in enumerate(orders) if choice >> i & 1))
        closure = galois_enums_to_relation(s)
        for relation in relations:
            assert (s <= extensions[relation]) == (relation <= closure)


def test_linear_extensions():
    assert len(linear_extensions(Relation.diagonal(ABC))) == 6
    pi = Enumeration.parse(ABC, "|b|c|a|")
    assert linear_extensions(toset_of(pi)) == EnumSet.of(ABC, [pi])
    assert not linear_extensions(rel(ABC, ("a", "b"), ("b", "a")))


def test_poset_based_sets():
    assert is_poset_based(all_enumerations(ABC))
    assert is_poset_based(halfspace_set(ABC, 0, 1))
    assert not is_poset_based(EnumSet.of(ABC, [Enumeration.parse(ABC, "|a|b|c|"), Enumeration.parse(ABC, "|c|b|a|")]))


def test_contraction():
    a_below_b = with_diagonal(rel(AB, ("a", "b")))
    assert is_contraction(a_below_b, a_below_b)
    assert is_contraction(a_below_b, Relation.full(AB))
    assert not is_contraction(Relation.diagonal(AB), a_below_b)
    with pytest.raises(NotPreposetError):
        is_contraction(rel(AB, ("a", "b")), Relation.full(AB))


def test_hasse():
    chain = toset_of(Enumeration.parse(ABC, "|a|b|c|"))
    assert hasse(chain) == rel(ABC, ("a", "b"), ("b", "c"))
    assert hasse(Relation.diagonal(ABC)) == Relation.empty(ABC)
    arrows = {("a", "e"), ("a", "f"), ("b", "d"), ("b", "f"), ("c", "d"), ("c", "e")}
    assert set(hasse(six_element_poset()).format_pairs()) == arrows
    assert transitive_closure(hasse(chain) | Relation.diagonal(ABC)) == chain
    with pytest.raises(NotPosetError):
        hasse(Relation.full(ABC))


def test_removing_a_covering_pair_keeps_a_poset():
    posets = [relation for relation in enumerate_relations(ABC) if classify(relation).is_poset]
    for poset in posets:
        for u, v in hasse(poset).pairs():
            smaller = poset - Relation.from_pairs(ABC, [(u, v)])
            assert classify(smaller).is_poset


def test_poset_dimension():
    assert poset_dimension(toset_of(Enumeration.parse(ABC, "|b|a|c|"))) == 1
    assert poset_dimension(Relation.diagonal(AB)) == 2
    with pytest.raises(GuardExceededError):
        poset_dimension(Relation.diagonal(GroundSet.of_size(7)))


@pytest.mark.slow
def test_six_element_poset_has_dimension_three():
    assert poset_dimension(six_element_poset()) == 3


def test_height_counts_incomparable_pairs():
    assert height_of(all_enumerations(ABC)) == 3
    assert height_of(EnumSet.of(ABC, [Enumeration.parse(ABC, "|a|b|c|")])) == 0
    assert height_of(EnumSet.empty(ABC)) == -1
    assert height_of(halfspace_set(ABC, 0, 1)) == 2
    with pytest.raises(NotPosetError):
        height_of(EnumSet.of(ABC, [Enumeration.parse(ABC, "|a|b|c|"), Enumeration.parse(ABC, "|c|b|a|")]))


@pytest.mark.parametrize("n, posets, preposets, total", [(1, 1, 1, 1), (2, 3, 4, 3), (3, 19, 29, 13)])
def test_relation_counts(n, posets, preposets, total):
    counts = count_relation_classes(n)
    assert (counts.posets, counts.preposets, counts.total_preposets) == (posets, preposets, total)


@pytest.mark.slow
def test_relation_counts_at_four():
    counts = count_relation_classes(4)
    assert counts.relations == 4096
    assert (counts.posets, counts.preposets, counts.total_preposets) == (219, 355, 75)


def test_exhaustive_enumeration_guard():
    with pytest.raises(GuardExceededError):
        next(enumerate_relations(GroundSet.of_size(5)))
