"""Extreme rays of the standardized supermodular cone by the double description method.

Coordinates are the values at subsets with at least two elements (singleton values are zero
after standardization); every elementary triplet contributes one inequality, taken in
canonical triplet order. All arithmetic is exact.
"""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..config import get_settings
from ..data_models import Game, GroundSet, popcount, subset_sort_key
from ..exceptions import GuardExceededError, InvalidInputError, VerificationError
from ..geometry.exact_linalg import independent_rows, primitive_integer_vector, rational_inverse, rational_rank
from .games import elementary_imset, elementary_triplets

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


@dataclass
class _Ray:
    vector: Vector
    zeros: int  # bitmask over processed inequality indices with value 0


def standardized_coordinates(ground: GroundSet) -> List[int]:
    return sorted((mask for mask in ground.subsets() if popcount(mask) >= 2), key=subset_sort_key)


def inequality_rows(ground: GroundSet) -> List[Vector]:
    """One row per elementary triplet, restricted to the standardized coordinates."""
    position = {mask: i for i, mask in enumerate(standardized_coordinates(ground))}
    rows = []
    for triplet in elementary_triplets(ground):
        row = [0] * len(position)
        for mask, coefficient in elementary_imset(triplet).coefficients.items():
            if mask in position:
                row[position[mask]] += coefficient
        rows.append(tuple(row))
    return rows


def _dot(row: Sequence[int], vector: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(row, vector))


def _members(bits: int) -> List[int]:
    return [i for i in range(bits.bit_length()) if bits >> i & 1]


def _check_range(n: int, force: bool) -> None:
    settings = get_settings()
    if n < 2:
        raise InvalidInputError(f"The standardized supermodular cone has no rays for n={n}; use n >= 2.")
    limit = settings.max_forced_rays_n if force else settings.max_rays_n
    if n > limit:
        hint = "" if force else " (pass force=True for longer runs)"
        raise GuardExceededError(f"Extreme-ray enumeration is limited to n <= {limit}{hint}.")


def extreme_ray_vectors(n: int, force: bool = False) -> List[Vector]:
    """Primitive integer generators of the extreme rays, over standardized_coordinates order."""
    _check_range(n, force)
    ground = GroundSet.of_size(n)
    rows = inequality_rows(ground)
    d = len(rows[0])

    basis = independent_rows(rows)
    if len(basis) != d:
        raise VerificationError(f"Inequalities have rank {len(basis)}, expected {d}; the cone is not pointed.")
    inverse = rational_inverse([rows[i] for i in basis])
    all_basis_bits = sum(1 << i for i in basis)
    rays = [
        _Ray(primitive_integer_vector([inverse[r][j] for r in range(d)]), all_basis_bits & ~(1 << basis[j]))
        for j in range(d)
    ]

    in_basis = set(basis)
    for k, row in enumerate(rows):
        if k in in_basis:
            continue
        values = [_dot(row, ray.vector) for ray in rays]
        positive = [(ray, value) for ray, value in zip(rays, values) if value > 0]
        negative = [(ray, value) for ray, value in zip(rays, values) if value < 0]
        kept = [
            _Ray(ray.vector, ray.zeros | (1 << k) if value == 0 else ray.zeros)
            for ray, value in zip(rays, values)
            if value >= 0
        ]
        for p, p_value in positive:
            for m, m_value in negative:
                common = p.zeros & m.zeros
                if popcount(common) < d - 2:
                    continue
                if rational_rank([rows[i] for i in _members(common)]) != d - 2:
                    continue
                combined = tuple(p_value * b - m_value * a for a, b in zip(p.vector, m.vector))
                kept.append(_Ray(primitive_integer_vector(combined), common | (1 << k)))
        logger.debug(f"Inequality {k + 1}/{len(rows)}: {len(kept)} rays")
        rays = kept

    vectors = sorted({ray.vector for ray in rays}, reverse=True)
    for vector in vectors:
        if any(_dot(row, vector) < 0 for row in rows):
            raise VerificationError(f"Ray {vector} violates a supermodularity inequality.")
    logger.info(f"n={n}: {len(vectors)} extreme rays of the standardized supermodular cone")
    return vectors


def extreme_rays(n: int, force: bool = False) -> List[Game]:
    """Extreme rays as standardized integer games (zero on the empty set and on singletons)."""
    ground = GroundSet.of_size(n)
    coordinates = standardized_coordinates(ground)
    games = []
    for vector in extreme_ray_vectors(n, force=force):
        games.append(Game.from_mapping(ground, dict(zip(coordinates, vector))))
    return games
