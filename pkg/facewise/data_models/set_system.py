from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, Tuple

from ..exceptions import InvalidInputError
from .ground import GroundSet, Subset, subset_sort_key


@dataclass(frozen=True)
class SetSystem:
    """A family of subsets of N, kept as bitmasks sorted by (size, lexicographic)."""

    ground: GroundSet
    members: Tuple[Subset, ...]

    def __post_init__(self):
        full = self.ground.full_mask
        unique = set(self.members)
        if any(mask < 0 or mask & ~full for mask in unique):
            raise InvalidInputError("Set system member refers to elements outside the ground set.")
        object.__setattr__(self, "members", tuple(sorted(unique, key=subset_sort_key)))

    @classmethod
    def of(cls, ground: GroundSet, members: Iterable[Subset]) -> "SetSystem":
        return cls(ground, tuple(members))

    @classmethod
    def from_label_sets(cls, ground: GroundSet, sets: Iterable[Iterable[str]]) -> "SetSystem":
        return cls(ground, tuple(ground.mask_of(labels) for labels in sets))

    @cached_property
    def member_set(self) -> FrozenSet[Subset]:
        return frozenset(self.members)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, mask: Subset) -> bool:
        return mask in self.member_set

    def __le__(self, other: "SetSystem") -> bool:
        self.ground.check_same(other.ground)
        return self.member_set <= other.member_set

    def __or__(self, other: "SetSystem") -> "SetSystem":
        self.ground.check_same(other.ground)
        return SetSystem(self.ground, self.members + other.members)

    def format(self) -> str:
        return "{" + ", ".join(self.ground.format_subset(mask) for mask in self.members) + "}"
