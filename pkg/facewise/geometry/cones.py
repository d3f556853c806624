"""Braid cones {x : x_u <= x_v for (u, v) in T}, represented by their canonical preposets.

Every geometric predicate here is decided on relations; vectors only enter through
membership tests and the generator certificate.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from ..combinatorics.relations import (
    classify,
    galois_enums_to_relation,
    is_contraction,
    is_poset_based,
    preposet_closure,
    toset_of,
)
from ..combinatorics.setsystems import downsets_of
from ..data_models import BraidCone, EnumSet, Enumeration, RationalVector, Relation, Subset, check_same_ground
from ..exceptions import InvalidInputError, VerificationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConicCertificate:
    """x = top * chi_N - sum of coefficient * chi_D over the recorded down-sets D."""

    top: Fraction
    downsets: Dict[Subset, Fraction] = field(default_factory=dict)

    def combine(self, cone: BraidCone) -> RationalVector:
        ground = cone.ground
        result = RationalVector.indicator(ground, ground.full_mask) * self.top
        for mask, coefficient in self.downsets.items():
            result = result - RationalVector.indicator(ground, mask) * coefficient
        return result


def cone_of(relation: Relation) -> BraidCone:
    return BraidCone(preposet_closure(relation))


def cone_contains(cone: BraidCone, x: RationalVector) -> bool:
    check_same_ground(cone, x)
    return all(x[u] <= x[v] for u, v in cone.preposet.off_diagonal_pairs())


def cone_generators(cone: BraidCone) -> List[RationalVector]:
    """chi_N followed by -chi_D for every down-set D of the preposet (the empty set included)."""
    ground = cone.ground
    generators = [RationalVector.indicator(ground, ground.full_mask)]
    generators.extend(-RationalVector.indicator(ground, mask) for mask in downsets_of(cone.preposet))
    return generators


def nonnegative_combination(cone: BraidCone, x: RationalVector) -> Optional[ConicCertificate]:
    """Non-negative coefficients over cone_generators reproducing x, or None when x is outside.

    Uses the level sets D_k = {l : x_l <= t_k} of the distinct values t_1 < ... < t_m of x,
    which are down-sets whenever x lies in the cone.
    """
    if not cone_contains(cone, x):
        return None
    ground = cone.ground
    levels = sorted(set(x.entries))
    coefficients: Dict[Subset, Fraction] = {}
    for low, high in zip(levels, levels[1:]):
        mask = sum(1 << i for i, value in enumerate(x.entries) if value <= low)
        coefficients[mask] = high - low
    top = levels[-1]
    if top < 0:
        coefficients[ground.full_mask] = coefficients.get(ground.full_mask, Fraction(0)) - top
        top = Fraction(0)
    certificate = ConicCertificate(top=top, downsets=coefficients)
    if certificate.combine(cone) != x:
        raise VerificationError(f"Level-set decomposition failed to reproduce {x}.")
    return certificate


def cone_subset(c1: BraidCone, c2: BraidCone) -> bool:
    """C1 is contained in C2 iff the preposet of C2 is contained in that of C1."""
    check_same_ground(c1, c2)
    return c2.preposet <= c1.preposet


def cone_intersection(c1: BraidCone, c2: BraidCone) -> BraidCone:
    check_same_ground(c1, c2)
    return cone_of(c1.preposet | c2.preposet)


def is_face_of(face: BraidCone, cone: BraidCone) -> bool:
    check_same_ground(face, cone)
    return is_contraction(cone.preposet, face.preposet)


def is_full_dimensional(cone: BraidCone) -> bool:
    return classify(cone.preposet).antisymmetric


def weyl_chamber(pi: Enumeration) -> BraidCone:
    return BraidCone(toset_of(pi))


def chamber_union_cone(s: EnumSet) -> Optional[BraidCone]:
    """The braid cone equal to the union of the Weyl chambers of S, or None if that union is not convex."""
    if not s:
        raise InvalidInputError("chamber_union_cone needs a non-empty set of enumerations.")
    if not is_poset_based(s):
        logger.debug(f"Union of {len(s)} Weyl chambers is not convex")
        return None
    return cone_of(galois_enums_to_relation(s))
