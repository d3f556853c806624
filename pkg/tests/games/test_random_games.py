import numpy as np
import pytest
from facewise.data_models import GroundSet
from facewise.exceptions import InvalidInputError
from facewise.games import is_supermodular, make_rng, random_supermodular


def test_same_seed_gives_the_same_game():
    assert random_supermodular(7, 4) == random_supermodular(7, 4)
    sequence = np.random.SeedSequence(3)
    assert random_supermodular(sequence, 3) == random_supermodular(np.random.SeedSequence(3), 3)


def test_different_seeds_give_different_games():
    assert len({random_supermodular(seed, 4) for seed in range(10)}) > 1


@pytest.mark.parametrize("n", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_random_games_are_supermodular(n):
    for seed in range(1000):
        assert is_supermodular(random_supermodular(seed, n))


def test_random_games_have_integer_values():
    game = random_supermodular(11, 3, terms=6, max_coeff=5)
    assert all(value.denominator == 1 for value in game.values)


def test_custom_ground_set():
    ground = GroundSet(("x", "y", "z"))
    assert random_supermodular(0, 3, ground=ground).ground == ground
    with pytest.raises(InvalidInputError):
        random_supermodular(0, 2, ground=ground)


def test_invalid_parameters():
    with pytest.raises(InvalidInputError):
        random_supermodular(0, 0)
    with pytest.raises(InvalidInputError):
        random_supermodular(0, 3, max_coeff=0)


def test_make_rng_passes_generators_through():
    rng = make_rng(5)
    assert make_rng(rng) is rng
    assert make_rng(5).integers(1000) == make_rng(5).integers(1000)
