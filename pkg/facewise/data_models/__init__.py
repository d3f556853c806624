from .bundle import CONDITION_KEYS, FaceDescriptorBundle, FaceReport
from .cone import BraidCone
from .game import ElementaryImset, ElementaryTriplet, Game, RationalVector
from .ground import (
    EnumSet,
    Enumeration,
    GroundSet,
    LabelPair,
    Subset,
    check_same_ground,
    members_of,
    popcount,
    subset_sort_key,
)
from .relation import Relation
from .set_system import SetSystem

__all__ = [
    "BraidCone",
    "CONDITION_KEYS",
    "ElementaryImset",
    "ElementaryTriplet",
    "EnumSet",
    "Enumeration",
    "FaceDescriptorBundle",
    "FaceReport",
    "Game",
    "GroundSet",
    "LabelPair",
    "RationalVector",
    "Relation",
    "SetSystem",
    "Subset",
    "check_same_ground",
    "members_of",
    "popcount",
    "subset_sort_key",
]
