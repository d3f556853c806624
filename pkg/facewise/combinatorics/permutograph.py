"""Enumerations of the ground set and the permutohedral graph they form.

Nodes of the permutohedral graph are enumerations; two of them are adjacent when
they differ by swapping two neighbouring positions, and the edge is labeled by the
swapped pair. Distances are counted in edges.
"""
import logging
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.drawing.nx_pydot import to_pydot

from ..config import get_settings
from ..data_models import (
    EnumSet,
    Enumeration,
    GroundSet,
    LabelPair,
    RationalVector,
    Relation,
    Subset,
    check_same_ground,
    members_of,
)
from ..exceptions import GuardExceededError, InvalidInputError

logger = logging.getLogger(__name__)

Order = Tuple[int, ...]
OrderedPartition = Tuple[Subset, ...]


def guard_enumerations(ground: GroundSet, limit: int = None) -> None:
    limit = get_settings().max_enumeration_n if limit is None else limit
    if ground.n > limit:
        raise GuardExceededError(f"{ground.n}! enumerations requested; the limit is n <= {limit}.")


@lru_cache(maxsize=None)
def toset_bits(order: Order) -> int:
    """The toset of an order packed into n*n bits: bit u*n+v is set iff u is not after v."""
    n = len(order)
    bits = 0
    for i, u in enumerate(order):
        for v in order[i:]:
            bits |= 1 << (u * n + v)
    return bits


def all_enumerations(ground: GroundSet) -> EnumSet:
    guard_enumerations(ground)
    return EnumSet.everything(ground)


def rank_vector(pi: Enumeration) -> RationalVector:
    """Vector of 1-based positions: the entry at element l is the position of l in pi."""
    return RationalVector(pi.ground, tuple(position + 1 for position in pi.positions))


def adjacency_label(pi: Enumeration, rho: Enumeration) -> Optional[LabelPair]:
    check_same_ground(pi, rho)
    differing = [i for i, (u, v) in enumerate(zip(pi.order, rho.order)) if u != v]
    if len(differing) != 2:
        return None
    i, j = differing
    if j != i + 1 or pi.order[i] != rho.order[j] or pi.order[j] != rho.order[i]:
        return None
    return LabelPair(pi.order[i], pi.order[j])


def inversions_between(pi: Enumeration, rho: Enumeration) -> FrozenSet[LabelPair]:
    check_same_ground(pi, rho)
    p, r = pi.positions, rho.positions
    return frozenset(
        LabelPair(u, v)
        for u, v in combinations(range(pi.ground.n), 2)
        if (p[u] < p[v]) != (r[u] < r[v])
    )


@lru_cache(maxsize=16)
def permutohedral_graph(ground: GroundSet) -> nx.Graph:
    """The permutohedral graph on order tuples; edges carry their ``label`` (a LabelPair)."""
    guard_enumerations(ground)
    graph = nx.Graph()
    for order in permutations(range(ground.n)):
        graph.add_node(order)
        for i in range(ground.n - 1):
            swapped = order[:i] + (order[i + 1], order[i]) + order[i + 2:]
            graph.add_edge(order, swapped, label=LabelPair(order[i], order[i + 1]))
    logger.info(f"Built permutohedral graph over {ground.n} elements: "
                f"{graph.number_of_nodes()} nodes, {graph.number_of_edges()} edges")
    return graph


def bfs_distance(pi: Enumeration, rho: Enumeration) -> int:
    ground = check_same_ground(pi, rho)
    return nx.shortest_path_length(permutohedral_graph(ground), pi.order, rho.order)


def geodesics(pi: Enumeration, rho: Enumeration) -> List[List[Enumeration]]:
    """All shortest walks from pi to rho."""
    ground = check_same_ground(pi, rho)
    paths = nx.all_shortest_paths(permutohedral_graph(ground), pi.order, rho.order)
    return [[Enumeration(ground, order) for order in path] for path in paths]


def is_between(pi: Enumeration, sigma: Enumeration, rho: Enumeration) -> bool:
    """True iff sigma lies on a geodesic between pi and rho (Inv[pi,sigma] and Inv[sigma,rho] disjoint)."""
    check_same_ground(pi, sigma, rho)
    return inversions_between(pi, sigma).isdisjoint(inversions_between(sigma, rho))


def is_geodetically_convex(s: EnumSet) -> bool:
    guard_enumerations(s.ground)
    inside = s.sorted_orders()
    outside = [toset_bits(order) for order in permutations(range(s.ground.n)) if order not in s.orders]
    # sigma is between pi and rho iff T_pi & T_rho is contained in T_sigma
    for i, pi in enumerate(inside):
        t_pi = toset_bits(pi)
        for rho in inside[i + 1:]:
            common = t_pi & toset_bits(rho)
            if any(common & ~t_sigma == 0 for t_sigma in outside):
                return False
    return True


def _require_non_empty(s: EnumSet, what: str) -> None:
    if not s:
        raise InvalidInputError(f"{what} is undefined for the empty set of enumerations.")


def inversions_in_set(s: EnumSet) -> FrozenSet[LabelPair]:
    _require_non_empty(s, "Inv(S)")
    graph = permutohedral_graph(s.ground)
    return frozenset(
        data["label"]
        for u, v, data in graph.subgraph(s.orders).edges(data=True)
    )


def covering_of_set(s: EnumSet) -> Relation:
    """Pairs (u, v) labeling a boundary edge of S with u before v at the inside endpoint."""
    _require_non_empty(s, "Cov(S)")
    graph = permutohedral_graph(s.ground)
    pairs = set()
    for order in s.orders:
        positions = Enumeration(s.ground, order).positions
        for neighbour in graph.neighbors(order):
            if neighbour in s.orders:
                continue
            label = graph.edges[order, neighbour]["label"]
            u, v = (label.u, label.v) if positions[label.u] < positions[label.v] else (label.v, label.u)
            pairs.add((u, v))
    return Relation.from_pairs(s.ground, pairs)


def halfspace_set(ground: GroundSet, u: int, v: int) -> EnumSet:
    """S_{u<v}: all enumerations placing u strictly before v."""
    if u == v:
        raise InvalidInputError("halfspace_set needs two distinct elements.")
    guard_enumerations(ground)
    return EnumSet(ground, frozenset(
        order for order in permutations(range(ground.n)) if order.index(u) < order.index(v)
    ))


def transpose_action(s: EnumSet, p: LabelPair) -> EnumSet:
    """Image of S under exchanging the elements u and v of the pair p."""
    swap = {p.u: p.v, p.v: p.u}
    return EnumSet(s.ground, frozenset(
        tuple(swap.get(element, element) for element in order) for order in s.orders
    ))


def closer_set(pi: Enumeration, rho: Enumeration) -> EnumSet:
    """Enumerations strictly closer to pi than to rho, for adjacent pi and rho."""
    if adjacency_label(pi, rho) is None:
        raise InvalidInputError(f"{pi} and {rho} are not adjacent in the permutohedral graph.")
    graph = permutohedral_graph(pi.ground)
    from_pi = nx.single_source_shortest_path_length(graph, pi.order)
    from_rho = nx.single_source_shortest_path_length(graph, rho.order)
    return EnumSet(pi.ground, frozenset(order for order in graph if from_pi[order] < from_rho[order]))


def diameter(s: EnumSet) -> int:
    """Largest distance between members of S; -1 for the empty set."""
    if not s:
        return -1
    members = list(s)
    return max(
        (len(inversions_between(pi, rho)) for i, pi in enumerate(members) for rho in members[i + 1:]),
        default=0,
    )


def ordered_partitions(ground: GroundSet) -> List[OrderedPartition]:
    """All ordered partitions of N into non-empty blocks (the faces of the permutohedron)."""
    guard_enumerations(ground)

    def extend(remaining: Subset) -> List[OrderedPartition]:
        if not remaining:
            return [()]
        result = []
        block = remaining
        while block:
            for rest in extend(remaining & ~block):
                result.append((block,) + rest)
            block = (block - 1) & remaining
        return result

    return sorted(extend(ground.full_mask), key=lambda blocks: [members_of(b) for b in blocks])


def face_enumerations(ground: GroundSet, blocks: Sequence[Subset]) -> EnumSet:
    """Enumerations listing the blocks in the given order (vertices of one permutohedron face)."""
    covered = 0
    for block in blocks:
        if not block or covered & block:
            raise InvalidInputError("Blocks of an ordered partition must be non-empty and disjoint.")
        covered |= block
    if covered != ground.full_mask:
        raise InvalidInputError("Blocks of an ordered partition must cover the ground set.")
    pieces = [list(permutations(members_of(block))) for block in blocks]
    return EnumSet(ground, frozenset(sum(choice, ()) for choice in product(*pieces)))


def to_dot(graph: nx.Graph, ground: GroundSet, name: str = "permutohedral") -> str:
    """DOT text for a graph on order tuples, edges labeled "{u,v}"."""
    labeled = nx.Graph(name=name)
    for order in graph.nodes:
        labeled.add_node(str(Enumeration(ground, order)))
    for left, right, data in graph.edges(data=True):
        labeled.add_edge(str(Enumeration(ground, left)), str(Enumeration(ground, right)),
                         label=data["label"].format(ground))
    return to_pydot(labeled).to_string()
