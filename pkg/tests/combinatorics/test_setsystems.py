import pytest
from facewise.combinatorics import (
    all_enumerations,
    chains_union,
    classify,
    count_linear_extensions,
    count_topologies,
    distinguishes_points,
    downsets_of,
    enumerate_relations,
    enumerate_topologies,
    enums_of_system,
    is_chain_lattice_member,
    is_poset_based,
    is_reduction,
    is_topology,
    linear_extensions,
    max_chain,
    power_set,
    relation_of_system,
    toset_of,
)
from facewise.data_models import EnumSet, Enumeration, GroundSet, Relation, SetSystem
from facewise.exceptions import NotPosetError, NotTopologyError

ABC = GroundSet.of_size(3)


def system(*sets):
    return SetSystem.from_label_sets(ABC, sets)


def preposets(ground):
    return [relation for relation in enumerate_relations(ground) if classify(relation).is_preposet]


def test_downsets_of_a_chain_form_its_maximal_chain():
    chain = toset_of(Enumeration.parse(ABC, "|a|b|c|"))
    assert downsets_of(chain) == system("", "a", "ab", "abc")
    assert downsets_of(Relation.diagonal(ABC)) == power_set(ABC)


def test_relation_of_system():
    assert relation_of_system(power_set(ABC)) == Relation.diagonal(ABC)
    assert relation_of_system(system("", "abc")) == Relation.full(ABC)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_downsets_and_preposets_correspond(n):
    ground = GroundSet.of_size(n)
    for relation in preposets(ground):
        topology = downsets_of(relation)
        assert is_topology(topology)
        assert relation_of_system(topology) == relation


def test_every_topology_comes_from_its_preposet():
    for topology in enumerate_topologies(ABC):
        assert downsets_of(relation_of_system(topology)) == topology


def test_topology_checks():
    assert is_topology(power_set(ABC))
    assert not is_topology(system("", "a", "b", "abc"))
    assert not is_topology(system("a", "abc"))


def test_points_are_distinguished_exactly_by_posets():
    for relation in preposets(ABC):
        assert distinguishes_points(downsets_of(relation)) == classify(relation).is_poset


def test_max_chain_and_union():
    pi = Enumeration.parse(ABC, "|b|c|a|")
    assert max_chain(pi) == system("", "b", "bc", "abc")
    both = EnumSet.of(ABC, [Enumeration.parse(ABC, "|a|b|c|"), Enumeration.parse(ABC, "|c|b|a|")])
    assert chains_union(both) == system("", "a", "c", "ab", "bc", "abc")


def test_enums_of_system_recovers_linear_extensions():
    for relation in preposets(ABC):
        if classify(relation).is_poset:
            assert enums_of_system(downsets_of(relation)) == linear_extensions(relation)
    assert enums_of_system(power_set(ABC)) == all_enumerations(ABC)
    assert not enums_of_system(system("a", "abc"))


def test_chain_lattice_membership():
    ends = EnumSet.of(ABC, [Enumeration.parse(ABC, "|a|b|c|"), Enumeration.parse(ABC, "|c|b|a|")])
    assert is_chain_lattice_member(ends)
    assert not is_poset_based(ends)
    missing_one = all_enumerations(ABC) - EnumSet.of(ABC, [Enumeration.parse(ABC, "|a|b|c|")])
    assert not is_chain_lattice_member(missing_one)


def test_separating_topologies_are_chain_unions_of_poset_based_sets():
    for topology in enumerate_topologies(ABC):
        if not distinguishes_points(topology):
            continue
        s = enums_of_system(topology)
        assert s and is_poset_based(s)
        assert chains_union(s) == topology


def test_reduction():
    power, chain = power_set(ABC), max_chain(Enumeration.parse(ABC, "|a|b|c|"))
    assert not is_reduction(power, chain)
    assert not is_reduction(chain, power)
    assert is_reduction(chain, chain)
    assert is_reduction(chain, system("", "abc"))
    with pytest.raises(NotTopologyError):
        is_reduction(system("", "a", "b", "abc"), power)


def test_count_linear_extensions_matches_enumeration():
    for relation in preposets(ABC):
        if classify(relation).is_poset:
            assert count_linear_extensions(relation) == len(linear_extensions(relation))
    with pytest.raises(NotPosetError):
        count_linear_extensions(Relation.full(ABC))


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 4), (3, 29)])
def test_topologies_are_counted_like_preposets(n, expected):
    assert count_topologies(n) == expected


@pytest.mark.slow
def test_topology_and_extension_counts_at_four():
    ground = GroundSet.of_size(4)
    assert count_topologies(4) == 355
    for relation in preposets(ground):
        if classify(relation).is_poset:
            assert count_linear_extensions(relation) == len(linear_extensions(relation))
