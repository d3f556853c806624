import pytest
from itertools import permutations

from facewise.data_models import Game, GroundSet
from facewise.exceptions import GuardExceededError, InvalidInputError
from facewise.games import descriptors, extreme_ray_vectors, extreme_rays, is_extreme, is_supermodular
from facewise.games.rays import inequality_rows, standardized_coordinates


def test_standardized_coordinates_skip_small_sets():
    ground = GroundSet.of_size(3)
    assert [ground.format_subset(mask) for mask in standardized_coordinates(ground)] == [
        "{a,b}", "{a,c}", "{b,c}", "{a,b,c}",
    ]
    assert len(inequality_rows(ground)) == 6


def test_two_elements_have_a_single_ray():
    assert extreme_ray_vectors(2) == [(1,)]


def test_three_elements_have_five_rays():
    rays = extreme_rays(3)
    assert len(rays) == 5
    assert all(is_supermodular(ray) and is_extreme(ray) for ray in rays)
    assert all(ray(1 << i) == 0 for ray in rays for i in range(3))
    assert len({descriptors(ray) for ray in rays}) == 5


def test_rays_are_primitive_integer_vectors():
    from math import gcd
    from functools import reduce

    for vector in extreme_ray_vectors(3):
        assert all(isinstance(value, int) and value >= 0 for value in vector)
        assert reduce(gcd, vector) == 1


def _relabel(game, order):
    """The game with element i renamed to order[i]."""
    def moved(mask):
        return sum(1 << order[i] for i in range(game.ground.n) if mask >> i & 1)

    return Game.from_function(game.ground, lambda mask: game(moved(mask)))


@pytest.mark.parametrize("n", [3, pytest.param(4, marks=pytest.mark.slow)])
def test_ray_set_is_closed_under_relabeling(n):
    rays = set(extreme_rays(n))
    for order in permutations(range(n)):
        assert {_relabel(ray, order) for ray in rays} == rays


@pytest.mark.slow
def test_four_elements_have_thirty_seven_rays():
    rays = extreme_rays(4)
    assert len(rays) == 37
    assert all(is_extreme(ray) for ray in rays)
    assert len({descriptors(ray) for ray in rays}) == 37


def test_ray_enumeration_guards():
    with pytest.raises(InvalidInputError):
        extreme_rays(1)
    with pytest.raises(GuardExceededError):
        extreme_rays(5)
    with pytest.raises(GuardExceededError):
        extreme_rays(6, force=True)
