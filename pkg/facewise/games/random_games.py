import logging
from typing import Optional, Union

import numpy as np

from ..config import get_settings
from ..data_models import Game, GroundSet, RationalVector, popcount
from ..exceptions import InvalidInputError
from .games import modular_game, unanimity_game

logger = logging.getLogger(__name__)

SeedLike = Union[int, np.random.SeedSequence, np.random.Generator]


def make_rng(seed: SeedLike) -> np.random.Generator:
    """A PCG64 generator; the seed (or seed sequence) is its only source of entropy."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


def random_supermodular(
    seed: SeedLike,
    n: int,
    terms: Optional[int] = None,
    max_coeff: Optional[int] = None,
    ground: Optional[GroundSet] = None,
) -> Game:
    """Random integer supermodular game: a positive combination of unanimity games u_B with |B| >= 2
    plus a random modular game.

    Identical seeds give identical games.
    """
    if n < 1:
        raise InvalidInputError(f"Random games need n >= 1, got {n}.")
    settings = get_settings()
    terms = settings.random_max_terms if terms is None else terms
    max_coeff = settings.random_max_coeff if max_coeff is None else max_coeff
    if terms < 0 or max_coeff < 1:
        raise InvalidInputError(f"Need terms >= 0 and max_coeff >= 1, got {terms} and {max_coeff}.")
    ground = ground or GroundSet.of_size(n)
    if ground.n != n:
        raise InvalidInputError(f"Ground set has {ground.n} elements, expected {n}.")
    rng = make_rng(seed)

    carriers = [mask for mask in ground.subsets() if popcount(mask) >= 2]
    game = modular_game(RationalVector(ground, tuple(
        int(value) for value in rng.integers(-max_coeff, max_coeff + 1, size=n)
    )))
    if not carriers:
        return game
    for _ in range(terms):
        carrier = carriers[int(rng.integers(len(carriers)))]
        coefficient = int(rng.integers(1, max_coeff + 1))
        game = game + unanimity_game(ground, carrier) * coefficient
    return game
