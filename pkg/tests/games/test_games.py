from fractions import Fraction

import numpy as np
import pytest
from facewise.catalog import marginal_example_game, tightness_counterexample_game
from facewise.combinatorics import (
    all_enumerations,
    chains_union,
    classify,
    enumerate_relations,
    halfspace_set,
    linear_extensions,
    max_chain,
    rank_vector,
    toset_of,
)
from facewise.data_models import EnumSet, ElementaryTriplet, Enumeration, Game, GroundSet, RationalVector, Relation
from facewise.exceptions import InvalidInputError, NotSupermodularError
from facewise.games import (
    basis_game,
    binomial_game,
    ci_structure,
    ci_via_tightness,
    core_contains,
    core_vertices,
    delta,
    elementary_triplets,
    exactness_check,
    fiber_of,
    is_modular,
    is_supermodular,
    is_supermodular_pairwise,
    marginal_vector,
    modular_game,
    random_supermodular,
    realize_poset_based,
    require_supermodular,
    square_game,
    tightness_class,
    unanimity_game,
    vertex_poset,
    zero_game,
)

ABC = GroundSet.of_size(3)


def vector(*entries):
    return RationalVector(ABC, entries)


def test_simple_games():
    assert zero_game(ABC)(ABC.full_mask) == 0
    assert modular_game(vector(1, 2, 3))(ABC.mask_of("ac")) == 4
    assert basis_game(ABC, ABC.mask_of("ab"))(ABC.mask_of("ab")) == 1
    assert basis_game(ABC, ABC.mask_of("ab"))(ABC.full_mask) == 0
    u_ab = unanimity_game(ABC, ABC.mask_of("ab"))
    assert [u_ab(mask) for mask in ABC.subsets()] == [0, 0, 0, 1, 0, 0, 0, 1]
    with pytest.raises(InvalidInputError):
        basis_game(ABC, 0)
    with pytest.raises(InvalidInputError):
        unanimity_game(ABC, 0)


@pytest.mark.parametrize("n, expected", [(2, 1), (3, 6), (4, 24)])
def test_elementary_triplet_count(n, expected):
    triplets = elementary_triplets(GroundSet.of_size(n))
    assert len(triplets) == expected
    assert triplets[0] == ElementaryTriplet(0, 1, 0)


def test_delta_of_square_game_is_two_everywhere():
    game = square_game(ABC)
    assert all(delta(game, t) == 2 for t in elementary_triplets(ABC))
    assert ci_structure(game) == frozenset()


def test_supermodularity_checks_agree():
    games = [random_supermodular(seed, 3) for seed in range(20)]
    games += [tightness_counterexample_game(), -square_game(ABC), marginal_example_game()]
    for game in games:
        assert is_supermodular(game) == is_supermodular_pairwise(game)
    assert not is_supermodular(tightness_counterexample_game())


def test_require_supermodular_names_the_failing_triplet():
    with pytest.raises(NotSupermodularError, match=r"\(a,b\|c\)"):
        require_supermodular(tightness_counterexample_game())


def test_modular_games():
    assert is_modular(modular_game(vector(1, -2, Fraction(1, 2))))
    assert is_modular(zero_game(ABC))
    assert not is_modular(unanimity_game(ABC, ABC.mask_of("bc")))


def test_marginal_vectors_of_the_worked_example():
    game = marginal_example_game()
    assert marginal_vector(game, Enumeration.parse(ABC, "|c|b|a|")) == vector(1, 1, 0)
    assert marginal_vector(game, Enumeration.parse(ABC, "|c|a|b|")) == vector(1, 1, 0)
    vertices = core_vertices(game)
    assert set(vertices) == {vector(1, 1, 0), vector(1, 0, 1), vector(0, 1, 1)}
    assert sum(len(fiber) for fiber in vertices.values()) == 6


def test_binomial_game_has_the_permutohedron_as_core():
    game = binomial_game(ABC)
    vertices = core_vertices(game)
    assert len(vertices) == 6
    for pi in all_enumerations(ABC):
        assert marginal_vector(game, pi) == rank_vector(pi)
        assert vertices[rank_vector(pi)] == EnumSet.of(ABC, [pi])
        assert tightness_class(game, rank_vector(pi)) == max_chain(pi)
        assert vertex_poset(game, rank_vector(pi)) == toset_of(pi)


def test_core_membership():
    game = binomial_game(ABC)
    assert core_contains(game, vector(2, 2, 2))
    assert core_contains(game, vector(1, 2, 3))
    assert not core_contains(game, vector(3, 3, 0))
    assert not core_contains(game, vector(2, 2, 3))


def test_fiber_of_matches_core_vertices():
    game = marginal_example_game()
    for vertex, fiber in core_vertices(game).items():
        assert fiber_of(game, vertex) == fiber
    assert not fiber_of(game, vector(2, 0, 0))


def test_core_vertices_rejects_non_supermodular_games():
    with pytest.raises(NotSupermodularError):
        core_vertices(tightness_counterexample_game())


def test_tightness_class_of_the_counterexample():
    tight = tightness_class(tightness_counterexample_game(), vector(1, 1, 1))
    assert tight.format() == "{{}, {a}, {a,c}, {b,c}, {a,b,c}}"


@pytest.mark.parametrize("n", [3, 4])
def test_random_supermodular_games_are_exact(n):
    for seed in range(10):
        assert exactness_check(random_supermodular(seed, n))


@pytest.mark.parametrize("n", [3, pytest.param(4, marks=pytest.mark.slow)])
def test_ci_structure_matches_tightness_of_some_vertex(n):
    for seed in range(200):
        game = random_supermodular(seed, n)
        for t in elementary_triplets(game.ground):
            assert (delta(game, t) == 0) == ci_via_tightness(game, t)


def test_ci_via_tightness_on_the_worked_example():
    game = marginal_example_game()
    assert ci_via_tightness(game, ElementaryTriplet(0, 1, ABC.mask_of("c")))
    assert not ci_via_tightness(game, ElementaryTriplet(0, 1, 0))


def test_vertex_poset_of_the_worked_example():
    game = marginal_example_game()
    expected = Relation.from_label_pairs(ABC, [("c", "a"), ("c", "b")]) | Relation.diagonal(ABC)
    assert vertex_poset(game, vector(1, 1, 0)) == expected
    with pytest.raises(InvalidInputError):
        vertex_poset(game, vector(2, 0, 0))


@pytest.mark.parametrize("n", [3, 4])
def test_vertex_poset_constructions_agree_on_random_games(n):
    for seed in range(50):
        game = random_supermodular(seed, n)
        for vertex, fiber in core_vertices(game).items():
            assert vertex_poset(game, vertex) <= toset_of(next(iter(fiber)))


def test_realized_game_has_the_set_as_a_fiber():
    s = halfspace_set(ABC, 0, 1)
    game = realize_poset_based(s)
    assert game == unanimity_game(ABC, ABC.mask_of("ab"))
    assert s in core_vertices(game).values()

    chain = EnumSet.of(ABC, [Enumeration.parse(ABC, "|b|c|a|")])
    assert chain in core_vertices(realize_poset_based(chain)).values()


def test_realize_rejects_sets_that_are_not_fibers():
    ends = EnumSet.of(ABC, [Enumeration.parse(ABC, "|a|b|c|"), Enumeration.parse(ABC, "|c|b|a|")])
    with pytest.raises(InvalidInputError):
        realize_poset_based(ends)
    with pytest.raises(InvalidInputError):
        realize_poset_based(EnumSet.empty(ABC))


def test_binomial_game_has_the_permutohedron_as_core_at_four():
    ground = GroundSet.of_size(4)
    game = binomial_game(ground)
    vertices = core_vertices(game)
    assert set(vertices) == {rank_vector(pi) for pi in all_enumerations(ground)}
    assert all(len(fiber) == 1 for fiber in vertices.values())


def test_marginal_vectors_are_linear_in_the_game():
    ground = GroundSet.of_size(4)
    rng = np.random.default_rng(21)
    for _ in range(20):
        first = Game(ground, (0,) + tuple(int(v) for v in rng.integers(-5, 6, 15)))
        second = Game(ground, (0,) + tuple(int(v) for v in rng.integers(-5, 6, 15)))
        alpha = Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 4)))
        beta = Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 4)))
        mixed = first * alpha + second * beta
        for pi in all_enumerations(ground):
            expected = marginal_vector(first, pi) * alpha + marginal_vector(second, pi) * beta
            assert marginal_vector(mixed, pi) == expected


@pytest.mark.parametrize("n", [3, 4])
def test_tightness_class_is_the_union_of_fiber_chains(n):
    for seed in range(40):
        game = random_supermodular(seed, n)
        for vertex, fiber in core_vertices(game).items():
            assert tightness_class(game, vertex) == chains_union(fiber)


def test_triplet_test_matches_the_pairwise_definition_at_four():
    ground = GroundSet.of_size(4)
    rng = np.random.default_rng(4)
    outcomes = set()
    for seed in range(100):
        game = random_supermodular(seed, 4)
        mask = int(rng.integers(1, 16))
        perturbed = game - basis_game(ground, mask) * int(rng.integers(0, 3))
        for candidate in (game, perturbed):
            outcome = is_supermodular(candidate)
            assert outcome == is_supermodular_pairwise(candidate)
            outcomes.add(outcome)
    assert outcomes == {True, False}


@pytest.mark.parametrize("n", [2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_every_poset_based_set_is_realized_as_a_fiber(n):
    ground = GroundSet.of_size(n)
    posets = [relation for relation in enumerate_relations(ground) if classify(relation).is_poset]
    for poset in posets:
        s = linear_extensions(poset)
        game = realize_poset_based(s)
        assert is_supermodular(game)
        assert s in core_vertices(game).values()
