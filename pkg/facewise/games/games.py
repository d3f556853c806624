"""Set functions over N: supermodularity, marginal vectors, cores, tightness and CI structures."""
import logging
from collections import defaultdict
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List

from ..combinatorics.permutograph import all_enumerations
from ..combinatorics.relations import galois_enums_to_relation, is_poset_based, preposet_closure, require_poset
from ..data_models import (
    ElementaryImset,
    ElementaryTriplet,
    EnumSet,
    Enumeration,
    Game,
    GroundSet,
    RationalVector,
    Relation,
    SetSystem,
    Subset,
    check_same_ground,
    popcount,
)
from ..exceptions import InvalidInputError, NotSupermodularError, VerificationError

logger = logging.getLogger(__name__)


def zero_game(ground: GroundSet) -> Game:
    return Game(ground, (0,) * (1 << ground.n))


def modular_game(y: RationalVector) -> Game:
    """The modular game S -> sum of y over S."""
    return Game.from_function(y.ground, y.sum_over)


def basis_game(ground: GroundSet, mask: Subset) -> Game:
    """delta_A: value 1 at A and 0 elsewhere."""
    if not mask:
        raise InvalidInputError("delta of the empty set is not a game (games vanish at the empty set).")
    return Game.from_mapping(ground, {mask: 1})


def unanimity_game(ground: GroundSet, mask: Subset) -> Game:
    if not mask:
        raise InvalidInputError("A unanimity game needs a non-empty carrier.")
    return Game.from_function(ground, lambda subset: int(subset & mask == mask))


def elementary_triplets(ground: GroundSet) -> List[ElementaryTriplet]:
    """All (a, b | C) in canonical order: by |C|, then C, then (a, b)."""
    triplets = [
        ElementaryTriplet(a, b, c)
        for a, b in combinations(range(ground.n), 2)
        for c in ground.subsets()
        if not c >> a & 1 and not c >> b & 1
    ]
    return sorted(triplets, key=ElementaryTriplet.sort_key)


def elementary_imset(triplet: ElementaryTriplet) -> ElementaryImset:
    return ElementaryImset(triplet)


def delta(game: Game, triplet: ElementaryTriplet) -> Fraction:
    """The supermodular difference g(abC) + g(C) - g(aC) - g(bC)."""
    return ElementaryImset(triplet).pair_with(game)


def is_supermodular(game: Game) -> bool:
    return all(delta(game, t) >= 0 for t in elementary_triplets(game.ground))


def is_supermodular_pairwise(game: Game) -> bool:
    """Supermodularity straight from g(D u E) + g(D n E) >= g(D) + g(E) for all D, E."""
    subsets = game.ground.subsets()
    return all(game(d | e) + game(d & e) >= game(d) + game(e) for d in subsets for e in subsets)


def require_supermodular(game: Game) -> None:
    for t in elementary_triplets(game.ground):
        value = delta(game, t)
        if value < 0:
            raise NotSupermodularError(
                f"Game is not supermodular: delta{t.format(game.ground)} = {value}."
            )


def is_modular(game: Game) -> bool:
    return all(delta(game, t) == 0 for t in elementary_triplets(game.ground))


def marginal_vector(game: Game, pi: Enumeration) -> RationalVector:
    check_same_ground(game, pi)
    entries = [Fraction(0)] * game.ground.n
    prefix = 0
    for element in pi.order:
        entries[element] = game(prefix | 1 << element) - game(prefix)
        prefix |= 1 << element
    return RationalVector(game.ground, tuple(entries))


def _group_by_marginal(game: Game) -> Dict[RationalVector, EnumSet]:
    groups = defaultdict(set)
    for pi in all_enumerations(game.ground):
        groups[marginal_vector(game, pi)].add(pi.order)
    return {vertex: EnumSet(game.ground, frozenset(orders)) for vertex, orders in groups.items()}


def core_vertices(game: Game) -> Dict[RationalVector, EnumSet]:
    """Vertices of the core, each mapped to its fiber of enumerations."""
    require_supermodular(game)
    vertices = _group_by_marginal(game)
    logger.debug(f"Core has {len(vertices)} vertices over {game.ground.n} elements")
    return vertices


def fiber_of(game: Game, y: RationalVector) -> EnumSet:
    check_same_ground(game, y)
    return EnumSet(game.ground, frozenset(
        pi.order for pi in all_enumerations(game.ground) if marginal_vector(game, pi) == y
    ))


def tightness_class(game: Game, y: RationalVector) -> SetSystem:
    check_same_ground(game, y)
    return SetSystem(game.ground, tuple(mask for mask in game.ground.subsets() if y.sum_over(mask) == game(mask)))


def core_contains(game: Game, z: RationalVector) -> bool:
    check_same_ground(game, z)
    if z.total() != game(game.ground.full_mask):
        return False
    return all(z.sum_over(mask) >= game(mask) for mask in game.ground.subsets())


def exactness_check(game: Game) -> bool:
    """True iff every value is attained as the minimum of the core vertices summed over that set."""
    vertices = list(core_vertices(game))
    return all(
        min(y.sum_over(mask) for y in vertices) == game(mask)
        for mask in game.ground.subsets()
    )


def ci_structure(game: Game) -> FrozenSet[ElementaryTriplet]:
    require_supermodular(game)
    return frozenset(t for t in elementary_triplets(game.ground) if delta(game, t) == 0)


def ci_via_tightness(game: Game, triplet: ElementaryTriplet) -> bool:
    """True iff some core vertex makes both aC and bC tight."""
    a_c = triplet.c | 1 << triplet.a
    b_c = triplet.c | 1 << triplet.b
    return any(
        y.sum_over(a_c) == game(a_c) and y.sum_over(b_c) == game(b_c)
        for y in core_vertices(game)
    )


def _difference_pair(difference: RationalVector):
    """(u, v) when difference = k * (chi_u - chi_v) with k > 0, else None."""
    support = [i for i, value in enumerate(difference.entries) if value]
    if len(support) != 2:
        return None
    i, j = support
    if difference[i] + difference[j] != 0:
        return None
    return (i, j) if difference[i] > 0 else (j, i)


def vertex_poset(game: Game, y: RationalVector) -> Relation:
    """The poset whose linear extensions form the fiber of the vertex y.

    Computed from the fiber and, independently, from the vertex differences along edges of the core;
    the two must agree.
    """
    vertices = core_vertices(game)
    if y not in vertices:
        raise InvalidInputError(f"{y} is not a vertex of the core.")
    from_fiber = galois_enums_to_relation(vertices[y])
    pairs = [pair for z in vertices if z != y for pair in [_difference_pair(z - y)] if pair is not None]
    from_differences = preposet_closure(Relation.from_pairs(game.ground, pairs))
    if from_fiber != from_differences:
        raise VerificationError(
            f"Fiber poset {from_fiber.format_pairs()} differs from vertex-difference poset "
            f"{from_differences.format_pairs()} at {y}."
        )
    return from_fiber


def realize_poset_based(s: EnumSet) -> Game:
    """A supermodular game one of whose fibers is exactly S: the sum of u_{u,v} over the strict pairs of its poset."""
    if not s:
        raise InvalidInputError("The empty set of enumerations is not a fiber.")
    if not is_poset_based(s):
        raise InvalidInputError("Only poset-based sets of enumerations are fibers of supermodular games.")
    poset = galois_enums_to_relation(s)
    require_poset(poset)
    game = zero_game(s.ground)
    for u, v in poset.off_diagonal_pairs():
        game = game + unanimity_game(s.ground, 1 << u | 1 << v)
    return game


def binomial_game(ground: GroundSet) -> Game:
    """S -> C(|S| + 1, 2); its core is the permutohedron."""
    return Game.from_function(ground, lambda mask: popcount(mask) * (popcount(mask) + 1) // 2)


def square_game(ground: GroundSet) -> Game:
    """S -> |S|^2; strictly supermodular."""
    return Game.from_function(ground, lambda mask: popcount(mask) ** 2)

