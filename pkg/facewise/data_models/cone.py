from dataclasses import dataclass

from ..exceptions import NotPreposetError
from .ground import GroundSet
from .relation import Relation


@dataclass(frozen=True)
class BraidCone:
    """The braid cone {x : x_u <= x_v for (u, v) in T}, keyed by its canonical preposet T."""

    preposet: Relation

    def __post_init__(self):
        rows = self.preposet.rows
        for u, row in enumerate(rows):
            if not row >> u & 1:
                raise NotPreposetError("Braid cones are stored by reflexive relations only.")
            for v in range(len(rows)):
                if row >> v & 1 and rows[v] & ~row:
                    raise NotPreposetError("Braid cones are stored by transitive relations only.")

    @property
    def ground(self) -> GroundSet:
        return self.preposet.ground
