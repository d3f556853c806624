"""Faces of the supermodular cone and their five combinatorial descriptions.

For supermodular games A and B the report functions decide whether A lies in the face
generated by B; every descriptor comparison below is one equivalent way of asking that.
"""
import logging
from fractions import Fraction
from typing import FrozenSet, Optional, Sequence, Tuple

from ..combinatorics.permutograph import all_enumerations
from ..combinatorics.relations import galois_enums_to_relation
from ..data_models import (
    ElementaryImset,
    ElementaryTriplet,
    FaceDescriptorBundle,
    FaceReport,
    Game,
    GroundSet,
    Subset,
    check_same_ground,
)
from ..exceptions import InvalidInputError, NotPolymatroidError, NotSupermodularError
from ..geometry.cones import cone_of, cone_subset
from ..geometry.exact_linalg import rational_rank
from .games import (
    ci_structure,
    core_vertices,
    delta,
    elementary_triplets,
    is_modular,
    marginal_vector,
    require_supermodular,
    tightness_class,
)

logger = logging.getLogger(__name__)

Witness = Tuple[Game, Fraction]


def descriptors(game: Game) -> FaceDescriptorBundle:
    vertices = core_vertices(game)
    ground = game.ground
    edges = set()
    for pi in all_enumerations(ground):
        order, prefix = pi.order, 0
        for i in range(ground.n - 1):
            if delta(game, ElementaryTriplet(order[i], order[i + 1], prefix)) == 0:
                swapped = order[:i] + (order[i + 1], order[i]) + order[i + 2:]
                edges.add(frozenset((order, swapped)))
            prefix |= 1 << order[i]
    return FaceDescriptorBundle(
        ground=ground,
        en_part=frozenset(vertices.values()),
        fan_pos=frozenset(galois_enums_to_relation(fiber) for fiber in vertices.values()),
        ti_str=frozenset(tightness_class(game, y) for y in vertices),
        in_str=ci_structure(game),
        per_sg_edges=frozenset(edges),
    )


def refines_enpart(b: FaceDescriptorBundle, a: FaceDescriptorBundle) -> bool:
    """Every block of B's enumeration partition lies inside a block of A's."""
    check_same_ground(a, b)
    return all(any(block <= coarse for coarse in a.en_part) for block in b.en_part)


def refines_tistr(b: FaceDescriptorBundle, a: FaceDescriptorBundle) -> bool:
    check_same_ground(a, b)
    return all(any(system <= coarse for coarse in a.ti_str) for system in b.ti_str)


def instr_subset(b: FaceDescriptorBundle, a: FaceDescriptorBundle) -> bool:
    check_same_ground(a, b)
    return b.in_str <= a.in_str


def subgraph_rel(b: FaceDescriptorBundle, a: FaceDescriptorBundle) -> bool:
    check_same_ground(a, b)
    return b.per_sg_edges <= a.per_sg_edges


def fanpos_sparser(a: FaceDescriptorBundle, b: FaceDescriptorBundle) -> bool:
    """For every poset R of B some poset Q of A satisfies Q <= R."""
    check_same_ground(a, b)
    return all(any(q <= r for q in a.fan_pos) for r in b.fan_pos)


def normal_fan_coarsens(a: FaceDescriptorBundle, b: FaceDescriptorBundle) -> bool:
    """Every normal cone of B's core sits inside a normal cone of A's core."""
    check_same_ground(a, b)
    a_cones = [cone_of(q) for q in a.fan_pos]
    return all(any(cone_subset(cone_of(r), cone) for cone in a_cones) for r in b.fan_pos)


def face_contains(face_game: Game, game: Game) -> bool:
    """True iff ``game`` lies in the face of the supermodular cone generated by ``face_game``."""
    check_same_ground(face_game, game)
    require_supermodular(game)
    return all(delta(game, t) == 0 for t in ci_structure(face_game))


def interior_witness(game_a: Game, game_b: Game) -> Optional[Witness]:
    """A supermodular C and alpha in ]0, 1[ with B = (1 - alpha) A + alpha C, or None.

    C is taken as (1 - beta) A + beta B for some beta > 1; the largest admissible beta is
    the least ratio dA / (dA - dB) over triplets where B's difference falls below A's.
    """
    check_same_ground(game_a, game_b)
    require_supermodular(game_a)
    require_supermodular(game_b)
    if game_a == game_b:
        return game_a, Fraction(1, 2)
    bound = None
    for t in elementary_triplets(game_a.ground):
        d_a, d_b = delta(game_a, t), delta(game_b, t)
        if d_b < d_a:
            ratio = d_a / (d_a - d_b)
            bound = ratio if bound is None else min(bound, ratio)
    if bound is not None and bound <= 1:
        return None
    beta = Fraction(2) if bound is None else min(Fraction(2), (1 + bound) / 2)
    game_c = game_a * (1 - beta) + game_b * beta
    if any(delta(game_c, t) < 0 for t in elementary_triplets(game_c.ground)):
        logger.error(f"Extrapolated game at beta={beta} is not supermodular")
        return None
    return game_c, 1 / beta


def _support_minimum(vertices, mask: Subset) -> Fraction:
    return min(y.sum_over(mask) for y in vertices)


def minkowski_check(game_a: Game, game_c: Game, alpha: Fraction) -> bool:
    """Check that the core of (1 - alpha) A + alpha C is the weighted Minkowski sum of the two cores.

    Verified on marginal vectors for every enumeration and on the support minima of every subset.
    """
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise InvalidInputError(f"alpha must lie strictly between 0 and 1, got {alpha}.")
    check_same_ground(game_a, game_c)
    mixed = game_a * (1 - alpha) + game_c * alpha
    vertices_a, vertices_c = core_vertices(game_a), core_vertices(game_c)
    try:
        vertices_mixed = core_vertices(mixed)
    except NotSupermodularError:
        return False
    for pi in all_enumerations(mixed.ground):
        expected = marginal_vector(game_a, pi) * (1 - alpha) + marginal_vector(game_c, pi) * alpha
        if marginal_vector(mixed, pi) != expected:
            return False
    for mask in mixed.ground.subsets():
        summed = (1 - alpha) * _support_minimum(vertices_a, mask) + alpha * _support_minimum(vertices_c, mask)
        if _support_minimum(vertices_mixed, mask) != summed or mixed(mask) != summed:
            return False
    return True


def theorem_report(game_a: Game, game_b: Game) -> FaceReport:
    """Every descriptor-level test of whether A lies in the face generated by B."""
    check_same_ground(game_a, game_b)
    bundle_a, bundle_b = descriptors(game_a), descriptors(game_b)
    witness = interior_witness(game_a, game_b)
    decomposes = False
    if witness is not None:
        game_c, alpha = witness
        decomposes = (
            minkowski_check(game_a, game_c, alpha)
            and game_a * (1 - alpha) + game_c * alpha == game_b
        )
    return FaceReport(
        ii=witness is not None,
        iii=decomposes,
        iv=normal_fan_coarsens(bundle_a, bundle_b),
        v=refines_enpart(bundle_b, bundle_a),
        vi=refines_tistr(bundle_b, bundle_a),
        vii=instr_subset(bundle_b, bundle_a),
        viii=subgraph_rel(bundle_b, bundle_a),
        ix=fanpos_sparser(bundle_a, bundle_b),
    )


def imset_row(triplet: ElementaryTriplet, ground: GroundSet) -> list:
    """Coefficients of the imset over the non-empty subsets 1 .. 2^n - 1."""
    row = [0] * ground.full_mask
    for mask, coefficient in ElementaryImset(triplet).coefficients.items():
        if mask:
            row[mask - 1] += coefficient
    return row


def face_dimension(game: Game) -> int:
    """Dimension of the face generated by the game: the games vanishing on its tight imsets."""
    ground = game.ground
    rows = [imset_row(t, ground) for t in sorted(ci_structure(game), key=ElementaryTriplet.sort_key)]
    return ground.full_mask - rational_rank(rows)


def standardize(game: Game) -> Game:
    """Subtract the singleton values: S -> g(S) - sum of g({i}) over i in S."""
    singles = [game(1 << i) for i in range(game.ground.n)]
    return Game.from_function(
        game.ground,
        lambda mask: game(mask) - sum((singles[i] for i in range(game.ground.n) if mask >> i & 1), Fraction(0)),
    )


def is_extreme(game: Game) -> bool:
    """True iff the game spans an extreme ray of the cone modulo modular games."""
    require_supermodular(game)
    if is_modular(game):
        raise InvalidInputError("Modular games lie in the linearity space and span no extreme ray.")
    return face_dimension(game) == game.ground.n + 1


def submodular_reflect(game: Game) -> Game:
    """S -> g(N) - g(N minus S); swaps supermodular and submodular games and is an involution."""
    full = game.ground.full_mask
    return Game.from_function(game.ground, lambda mask: game(full) - game(full & ~mask))


def is_submodular(game: Game) -> bool:
    return all(delta(game, t) <= 0 for t in elementary_triplets(game.ground))


def is_polymatroid(h: Game) -> bool:
    ground = h.ground
    monotone = all(
        h(mask) <= h(mask | 1 << t)
        for mask in ground.subsets()
        for t in range(ground.n)
    )
    return monotone and is_submodular(h)


def flats_closure(h: Game, mask: Subset) -> Subset:
    """cl(S): all t whose addition to S keeps the rank."""
    if not is_polymatroid(h):
        raise NotPolymatroidError("flats_closure needs a polymatroid rank function.")
    value = h(mask)
    return sum(1 << t for t in range(h.ground.n) if h(mask | 1 << t) == value)


def flats_partition(h: Game) -> FrozenSet[FrozenSet[Subset]]:
    """Classes of subsets with the same closure."""
    classes = {}
    for mask in h.ground.subsets():
        classes.setdefault(flats_closure(h, mask), set()).add(mask)
    return frozenset(frozenset(members) for members in classes.values())


def _check_blocks(blocks: Sequence[Subset]) -> None:
    covered = 0
    for block in blocks:
        if not block:
            raise InvalidInputError("Partition blocks must be non-empty.")
        if covered & block:
            raise InvalidInputError("Partition blocks must be pairwise disjoint.")
        covered |= block


def partition_equivalence(blocks: Sequence[Subset], s: Subset, t: Subset) -> bool:
    """S ~ T iff S and T meet every block in the same number of elements."""
    _check_blocks(blocks)
    return all(bin(s & block).count("1") == bin(t & block).count("1") for block in blocks)


def partition_classes(blocks: Sequence[Subset], ground: GroundSet) -> FrozenSet[FrozenSet[Subset]]:
    _check_blocks(blocks)
    if any(block & ~ground.full_mask for block in blocks):
        raise InvalidInputError("Partition blocks must lie inside the ground set.")
    classes = {}
    for mask in ground.subsets():
        key = tuple(bin(mask & block).count("1") for block in blocks)
        classes.setdefault(key, set()).add(mask)
    return frozenset(frozenset(members) for members in classes.values())
