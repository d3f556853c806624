import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

import networkx as nx

from ..config import get_settings
from ..data_models import EnumSet, Enumeration, GroundSet, Relation, check_same_ground
from ..exceptions import GuardExceededError, NotPosetError, NotPreposetError
from .permutograph import guard_enumerations, inversions_in_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RelationFlags:
    reflexive: bool
    transitive: bool
    antisymmetric: bool
    acyclic_offdiagonal: bool
    is_poset: bool
    is_preposet: bool
    is_toset: bool


@dataclass(frozen=True)
class RelationCounts:
    n: int
    relations: int
    posets: int
    preposets: int
    total_preposets: int


def transitive_closure(relation: Relation) -> Relation:
    """Smallest transitive relation containing ``relation`` (Warshall over row bitmasks)."""
    rows = list(relation.rows)
    for k in range(len(rows)):
        bit = 1 << k
        row_k = rows[k]
        for i, row in enumerate(rows):
            if row & bit:
                rows[i] = row | row_k
    return Relation(relation.ground, tuple(rows))


def _is_transitive(relation: Relation) -> bool:
    rows = relation.rows
    return all(rows[v] & ~row == 0 for row in rows for v in range(len(rows)) if row >> v & 1)


def classify(relation: Relation) -> RelationFlags:
    rows = relation.rows
    n = len(rows)
    reflexive = all(row >> u & 1 for u, row in enumerate(rows))
    transitive = _is_transitive(relation)
    antisymmetric = all(
        not (rows[u] >> v & 1 and rows[v] >> u & 1) for u, v in combinations(range(n), 2)
    )
    acyclic = nx.is_directed_acyclic_graph(relation.to_digraph())
    total = all(rows[u] >> v & 1 or rows[v] >> u & 1 for u, v in combinations(range(n), 2))
    is_preposet = reflexive and transitive
    is_poset = is_preposet and antisymmetric
    return RelationFlags(
        reflexive=reflexive,
        transitive=transitive,
        antisymmetric=antisymmetric,
        acyclic_offdiagonal=acyclic,
        is_poset=is_poset,
        is_preposet=is_preposet,
        is_toset=is_poset and total,
    )


def require_poset(relation: Relation) -> None:
    if not classify(relation).is_poset:
        raise NotPosetError("Expected a poset (reflexive, transitive, antisymmetric relation).")


def require_preposet(relation: Relation) -> None:
    if not classify(relation).is_preposet:
        raise NotPreposetError("Expected a preposet (reflexive and transitive relation).")


def preposet_closure(relation: Relation) -> Relation:
    return transitive_closure(relation | Relation.diagonal(relation.ground))


def precedes_closure(relation: Relation) -> Relation:
    """tr(T u diagonal) when T minus the diagonal is acyclic, otherwise all of N x N."""
    if not nx.is_directed_acyclic_graph(relation.to_digraph()):
        return Relation.full(relation.ground)
    return preposet_closure(relation)


def toset_of(pi: Enumeration) -> Relation:
    rows = [0] * pi.ground.n
    later = 0
    for element in reversed(pi.order):
        later |= 1 << element
        rows[element] = later
    return Relation(pi.ground, tuple(rows))


def galois_enums_to_relation(s: EnumSet) -> Relation:
    """Intersection of the tosets of all members; N x N for the empty set."""
    result = Relation.full(s.ground)
    for pi in s:
        result = result & toset_of(pi)
    return result


def linear_extensions(relation: Relation) -> EnumSet:
    """All enumerations whose toset contains ``relation``."""
    guard_enumerations(relation.ground)
    graph = relation.to_digraph()
    if not nx.is_directed_acyclic_graph(graph):
        return EnumSet.empty(relation.ground)
    return EnumSet(relation.ground, frozenset(tuple(order) for order in nx.all_topological_sorts(graph)))


def is_poset_based(s: EnumSet) -> bool:
    return s == linear_extensions(galois_enums_to_relation(s))


def is_contraction(t: Relation, r: Relation) -> bool:
    """True iff R = tr(T u Q) for some Q contained in the opposite of T.

    The admissible Q are closed upwards inside R n T^op, so testing the largest one suffices.
    """
    check_same_ground(t, r)
    require_preposet(t)
    require_preposet(r)
    return r == transitive_closure(t | (r & t.opposite()))


def hasse(relation: Relation) -> Relation:
    """Covering pairs (u, v): u strictly below v with nothing strictly between."""
    require_poset(relation)
    reduction = nx.transitive_reduction(relation.to_digraph())
    return Relation.from_pairs(relation.ground, reduction.edges())


def poset_dimension(relation: Relation) -> int:
    """Least number of linear extensions whose intersection is the poset."""
    limit = get_settings().max_dimension_n
    if relation.ground.n > limit:
        raise GuardExceededError(f"Poset dimension search is limited to n <= {limit}.")
    require_poset(relation)
    tosets = [toset_of(pi).rows for pi in linear_extensions(relation)]
    target = relation.rows
    for k in range(1, len(tosets) + 1):
        for realizer in combinations(tosets, k):
            if tuple(_and_rows(rows) for rows in zip(*realizer)) == target:
                logger.info(f"Poset dimension {k} found among {len(tosets)} linear extensions")
                return k
    raise NotPosetError("The relation has no realizer; it is not a poset.")


def _and_rows(values) -> int:
    result = -1
    for value in values:
        result &= value
    return result


def height_of(s: EnumSet) -> int:
    """Height in the lattice of poset-based sets: |Inv(S)|, and -1 for the empty set."""
    if not is_poset_based(s):
        raise NotPosetError("height_of is defined for poset-based sets of enumerations only.")
    if not s:
        return -1
    return len(inversions_in_set(s))


def enumerate_relations(ground: GroundSet) -> Iterator[Relation]:
    """Every reflexive relation on N (one per choice of off-diagonal pairs)."""
    limit = get_settings().max_exhaustive_n
    if ground.n > limit:
        raise GuardExceededError(f"Exhaustive relation enumeration is limited to n <= {limit}.")
    n = ground.n
    choices = [[1 << u | other for other in _row_choices(n, u)] for u in range(n)]
    for rows in product(*choices):
        yield Relation(ground, rows)


def _row_choices(n: int, u: int):
    others = [1 << v for v in range(n) if v != u]
    for k in range(len(others) + 1):
        for picked in combinations(others, k):
            yield sum(picked)


def count_relation_classes(n: int) -> RelationCounts:
    """Exhaustive counts of posets, preposets and total preposets on n labeled points."""
    ground = GroundSet.of_size(n)
    relations = posets = preposets = total = 0
    for relation in enumerate_relations(ground):
        relations += 1
        flags = classify(relation)
        if not flags.is_preposet:
            continue
        preposets += 1
        posets += flags.is_poset
        rows = relation.rows
        total += all(rows[u] >> v & 1 or rows[v] >> u & 1 for u, v in combinations(range(n), 2))
    logger.info(f"n={n}: {relations} reflexive relations, {preposets} preposets, {posets} posets")
    return RelationCounts(n=n, relations=relations, posets=posets, preposets=preposets, total_preposets=total)


def count_posets(n: int) -> int:
    return count_relation_classes(n).posets


def count_preposets(n: int) -> int:
    return count_relation_classes(n).preposets


def count_total_preposets(n: int) -> int:
    return count_relation_classes(n).total_preposets
