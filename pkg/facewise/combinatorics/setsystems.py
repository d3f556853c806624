"""Set systems over the power set: down-sets of preposets, finite topologies and chains of enumerations."""
import logging
from itertools import combinations
from typing import Dict, Iterator, List

from ..config import get_settings
from ..data_models import EnumSet, Enumeration, GroundSet, Relation, SetSystem, check_same_ground
from ..exceptions import GuardExceededError, NotTopologyError
from .permutograph import guard_enumerations
from .relations import is_contraction, require_poset

logger = logging.getLogger(__name__)


def _predecessors(relation: Relation) -> List[int]:
    """preds[v] is the mask of all u with (u, v) in the relation."""
    preds = [0] * relation.ground.n
    for u, row in enumerate(relation.rows):
        for v in range(relation.ground.n):
            if row >> v & 1:
                preds[v] |= 1 << u
    return preds


def power_set(ground: GroundSet) -> SetSystem:
    return SetSystem(ground, tuple(ground.subsets()))


def downsets_of(relation: Relation) -> SetSystem:
    """Subsets D with: v in D and (u, v) in T imply u in D."""
    preds = _predecessors(relation)
    n = relation.ground.n
    return SetSystem(relation.ground, tuple(
        mask for mask in relation.ground.subsets()
        if all(preds[v] & ~mask == 0 for v in range(n) if mask >> v & 1)
    ))


def relation_of_system(system: SetSystem) -> Relation:
    """Pairs (u, v) such that every member containing v also contains u."""
    n = system.ground.n
    pairs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if all(mask >> u & 1 for mask in system if mask >> v & 1)
    ]
    return Relation.from_pairs(system.ground, pairs)


def is_topology(system: SetSystem) -> bool:
    members = system.member_set
    if 0 not in members or system.ground.full_mask not in members:
        return False
    return all(a & b in members and a | b in members for a, b in combinations(system.members, 2))


def require_topology(system: SetSystem) -> None:
    if not is_topology(system):
        raise NotTopologyError(f"{system.format()} is not a topology (needs empty set, N, and closure under meet and join).")


def distinguishes_points(system: SetSystem) -> bool:
    n = system.ground.n
    return all(
        any((mask >> u & 1) != (mask >> v & 1) for mask in system)
        for u, v in combinations(range(n), 2)
    )


def max_chain(pi: Enumeration) -> SetSystem:
    prefixes = [0]
    for element in pi.order:
        prefixes.append(prefixes[-1] | 1 << element)
    return SetSystem(pi.ground, tuple(prefixes))


def chains_union(s: EnumSet) -> SetSystem:
    masks = set()
    for pi in s:
        masks.update(max_chain(pi))
    return SetSystem(s.ground, tuple(masks))


def enums_of_system(system: SetSystem) -> EnumSet:
    """Enumerations whose whole maximal chain lies inside the system."""
    ground = system.ground
    guard_enumerations(ground)
    members = system.member_set
    found = set()
    if 0 not in members:
        return EnumSet.empty(ground)

    def extend(prefix: int, order: tuple) -> None:
        if prefix == ground.full_mask:
            found.add(order)
            return
        for element in range(ground.n):
            bit = 1 << element
            if not prefix & bit and prefix | bit in members:
                extend(prefix | bit, order + (element,))

    extend(0, ())
    return EnumSet(ground, frozenset(found))


def is_chain_lattice_member(s: EnumSet) -> bool:
    return s == enums_of_system(chains_union(s))


def is_reduction(dt: SetSystem, dr: SetSystem) -> bool:
    """True iff DR is a reduction of the topology DT, decided on the associated preposets."""
    check_same_ground(dt, dr)
    require_topology(dt)
    require_topology(dr)
    return is_contraction(relation_of_system(dt), relation_of_system(dr))


def count_linear_extensions(relation: Relation) -> int:
    """Number of maximal chains from the empty set to N inside the down-set lattice."""
    require_poset(relation)
    downsets = downsets_of(relation)
    members = downsets.member_set
    ways: Dict[int, int] = {0: 1}
    for mask in downsets:
        count = ways.get(mask, 0)
        if not count:
            continue
        for element in range(relation.ground.n):
            bit = 1 << element
            if not mask & bit and mask | bit in members:
                ways[mask | bit] = ways.get(mask | bit, 0) + count
    return ways.get(relation.ground.full_mask, 0)


def enumerate_topologies(ground: GroundSet) -> Iterator[SetSystem]:
    """Every topology on N, by brute force over families containing the empty set and N."""
    limit = get_settings().max_exhaustive_n
    if ground.n > limit:
        raise GuardExceededError(f"Exhaustive topology enumeration is limited to n <= {limit}.")
    full = ground.full_mask
    inner = [mask for mask in ground.subsets() if mask not in (0, full)]
    for choice in range(1 << len(inner)):
        picked = {0, full}
        picked.update(mask for i, mask in enumerate(inner) if choice >> i & 1)
        if all(a & b in picked and a | b in picked for a in picked for b in picked):
            yield SetSystem(ground, tuple(picked))


def count_topologies(n: int) -> int:
    ground = GroundSet.of_size(n)
    total = sum(1 for _ in enumerate_topologies(ground))
    logger.info(f"n={n}: {total} topologies")
    return total
