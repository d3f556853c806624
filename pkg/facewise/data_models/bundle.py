from dataclasses import dataclass, fields
from typing import Dict, FrozenSet, Tuple

from .game import ElementaryTriplet
from .ground import EnumSet, GroundSet
from .relation import Relation
from .set_system import SetSystem

Edge = FrozenSet[Tuple[int, ...]]


@dataclass(frozen=True)
class FaceDescriptorBundle:
    """The five combinatorial descriptors of the face generated by one supermodular game."""

    ground: GroundSet
    en_part: FrozenSet[EnumSet]
    fan_pos: FrozenSet[Relation]
    ti_str: FrozenSet[SetSystem]
    in_str: FrozenSet[ElementaryTriplet]
    per_sg_edges: FrozenSet[Edge]


CONDITION_KEYS = ("ii", "iii", "iv", "v", "vi", "vii", "viii", "ix")


@dataclass(frozen=True)
class FaceReport:
    """Truth values of the face-inclusion conditions for an ordered pair of games."""

    ii: bool
    iii: bool
    iv: bool
    v: bool
    vi: bool
    vii: bool
    viii: bool
    ix: bool

    @property
    def agreement(self) -> bool:
        return len(set(self.as_dict().values())) == 1

    def as_dict(self) -> Dict[str, bool]:
        return {field.name: getattr(self, field.name) for field in fields(self)}
