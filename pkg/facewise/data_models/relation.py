from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

import networkx as nx

from ..exceptions import InvalidInputError
from .ground import GroundSet, members_of


@dataclass(frozen=True)
class Relation:
    """A binary relation on N x N.

    ``rows[u]`` is a bitmask whose bit ``v`` is set iff the pair (u, v) belongs
    to the relation, i.e. the boolean n x n matrix stored row by row.
    """

    ground: GroundSet
    rows: Tuple[int, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.ground.n:
            raise InvalidInputError(f"Relation has {len(rows)} rows for a ground set of size {self.ground.n}.")
        full = self.ground.full_mask
        if any(row & ~full for row in rows):
            raise InvalidInputError("Relation row refers to elements outside the ground set.")

    @classmethod
    def empty(cls, ground: GroundSet) -> "Relation":
        return cls(ground, (0,) * ground.n)

    @classmethod
    def diagonal(cls, ground: GroundSet) -> "Relation":
        return cls(ground, tuple(1 << u for u in range(ground.n)))

    @classmethod
    def full(cls, ground: GroundSet) -> "Relation":
        return cls(ground, (ground.full_mask,) * ground.n)

    @classmethod
    def from_pairs(cls, ground: GroundSet, pairs: Iterable[Tuple[int, int]]) -> "Relation":
        rows = [0] * ground.n
        for u, v in pairs:
            if not (0 <= u < ground.n and 0 <= v < ground.n):
                raise InvalidInputError(f"Pair ({u}, {v}) is outside the ground set.")
            rows[u] |= 1 << v
        return cls(ground, tuple(rows))

    @classmethod
    def from_label_pairs(cls, ground: GroundSet, pairs: Iterable[Tuple[str, str]]) -> "Relation":
        return cls.from_pairs(ground, [(ground.index(u), ground.index(v)) for u, v in pairs])

    def has(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def pairs(self) -> Iterator[Tuple[int, int]]:
        for u, row in enumerate(self.rows):
            for v in members_of(row):
                yield u, v

    def off_diagonal_pairs(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, v in self.pairs() if u != v]

    def __len__(self) -> int:
        return sum(bin(row).count("1") for row in self.rows)

    def __or__(self, other: "Relation") -> "Relation":
        self.ground.check_same(other.ground)
        return Relation(self.ground, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def __and__(self, other: "Relation") -> "Relation":
        self.ground.check_same(other.ground)
        return Relation(self.ground, tuple(a & b for a, b in zip(self.rows, other.rows)))

    def __sub__(self, other: "Relation") -> "Relation":
        self.ground.check_same(other.ground)
        return Relation(self.ground, tuple(a & ~b for a, b in zip(self.rows, other.rows)))

    def __le__(self, other: "Relation") -> bool:
        self.ground.check_same(other.ground)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def __lt__(self, other: "Relation") -> bool:
        return self <= other and self != other

    def opposite(self) -> "Relation":
        return Relation.from_pairs(self.ground, ((v, u) for u, v in self.pairs()))

    def without_diagonal(self) -> "Relation":
        return Relation(self.ground, tuple(row & ~(1 << u) for u, row in enumerate(self.rows)))

    def to_digraph(self) -> nx.DiGraph:
        """Off-diagonal pairs as a directed graph on all ground indices."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.ground.n))
        graph.add_edges_from(self.off_diagonal_pairs())
        return graph

    def format_pairs(self) -> List[Tuple[str, str]]:
        labels = self.ground.labels
        return [(labels[u], labels[v]) for u, v in self.off_diagonal_pairs()]
