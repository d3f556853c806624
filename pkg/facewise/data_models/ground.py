from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from string import ascii_lowercase
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from ..exceptions import GroundSetMismatchError, InvalidInputError

# A subset of the ground set is a plain int bitmask; bit i stands for ground index i.
Subset = int


def popcount(mask: Subset) -> int:
    return bin(mask).count("1")


def members_of(mask: Subset) -> List[int]:
    """Ground indices in ``mask`` in increasing order."""
    result = []
    index = 0
    while mask:
        if mask & 1:
            result.append(index)
        mask >>= 1
        index += 1
    return result


def subset_sort_key(mask: Subset) -> Tuple[int, List[int]]:
    """Canonical order on subsets: by size, then lexicographically by member indices."""
    return popcount(mask), members_of(mask)


@dataclass(frozen=True)
class GroundSet:
    """The finite basic set N; the label order fixes the bit layout of subsets."""

    labels: Tuple[str, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise InvalidInputError("A ground set needs at least one element.")
        if any(not isinstance(label, str) or not label for label in labels):
            raise InvalidInputError(f"Ground labels must be non-empty strings, got {labels!r}.")
        if len(set(labels)) != len(labels):
            raise InvalidInputError(f"Ground labels must be distinct, got {labels!r}.")

    @classmethod
    def of_size(cls, n: int) -> "GroundSet":
        """Ground set ``a, b, c, ...`` (``e1, e2, ...`` beyond 26 elements)."""
        if n < 1:
            raise InvalidInputError(f"Ground set size must be positive, got {n}.")
        if n <= len(ascii_lowercase):
            return cls(tuple(ascii_lowercase[:n]))
        return cls(tuple(f"e{i + 1}" for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> Subset:
        return (1 << self.n) - 1

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InvalidInputError(f"Unknown label {label!r}; ground set is {list(self.labels)}.") from None

    def mask_of(self, labels: Iterable[str]) -> Subset:
        mask = 0
        for label in labels:
            bit = 1 << self.index(label)
            if mask & bit:
                raise InvalidInputError(f"Label {label!r} listed twice in a subset.")
            mask |= bit
        return mask

    def labels_of(self, mask: Subset) -> List[str]:
        return [self.labels[i] for i in members_of(mask)]

    def format_subset(self, mask: Subset) -> str:
        return "{" + ",".join(self.labels_of(mask)) + "}"

    def subsets(self) -> range:
        return range(1 << self.n)

    def check_same(self, other: "GroundSet") -> None:
        if self != other:
            raise GroundSetMismatchError(
                f"Ground sets differ: {list(self.labels)} vs {list(other.labels)}."
            )


def check_same_ground(*items) -> GroundSet:
    """Return the shared ground set of ``items`` or raise GroundSetMismatchError."""
    ground = items[0].ground
    for item in items[1:]:
        ground.check_same(item.ground)
    return ground


@dataclass(frozen=True)
class Enumeration:
    """A bijection from positions 1..n onto the ground set, stored as ground indices."""

    ground: GroundSet
    order: Tuple[int, ...]

    def __post_init__(self):
        order = tuple(self.order)
        object.__setattr__(self, "order", order)
        if sorted(order) != list(range(self.ground.n)):
            raise InvalidInputError(f"Order {order} is not a permutation of 0..{self.ground.n - 1}.")

    @classmethod
    def from_labels(cls, ground: GroundSet, labels: Sequence[str]) -> "Enumeration":
        return cls(ground, tuple(ground.index(label) for label in labels))

    @classmethod
    def parse(cls, ground: GroundSet, text: str) -> "Enumeration":
        """Parse the bar notation ``|a|b|c|``."""
        parts = [part for part in text.strip().split("|") if part]
        return cls.from_labels(ground, parts)

    @cached_property
    def positions(self) -> Tuple[int, ...]:
        """0-based position of every ground index."""
        positions = [0] * len(self.order)
        for position, element in enumerate(self.order):
            positions[element] = position
        return tuple(positions)

    def labels(self) -> List[str]:
        return [self.ground.labels[i] for i in self.order]

    def __str__(self) -> str:
        return "|" + "|".join(self.labels()) + "|"


@dataclass(frozen=True)
class LabelPair:
    """Unordered pair {u, v} of distinct ground indices, stored with u < v."""

    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise InvalidInputError(f"A label pair needs two distinct elements, got {self.u} twice.")
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    def format(self, ground: GroundSet) -> str:
        return "{" + ground.labels[self.u] + "," + ground.labels[self.v] + "}"


@dataclass(frozen=True)
class EnumSet:
    """A set of enumerations of one ground set; iteration is in lexicographic order."""

    ground: GroundSet
    orders: FrozenSet[Tuple[int, ...]]

    def __post_init__(self):
        object.__setattr__(self, "orders", frozenset(tuple(order) for order in self.orders))

    @classmethod
    def of(cls, ground: GroundSet, enumerations: Iterable[Enumeration]) -> "EnumSet":
        orders = set()
        for enumeration in enumerations:
            ground.check_same(enumeration.ground)
            orders.add(enumeration.order)
        return cls(ground, frozenset(orders))

    @classmethod
    def empty(cls, ground: GroundSet) -> "EnumSet":
        return cls(ground, frozenset())

    @classmethod
    def everything(cls, ground: GroundSet) -> "EnumSet":
        return cls(ground, frozenset(permutations(range(ground.n))))

    def __iter__(self) -> Iterator[Enumeration]:
        for order in sorted(self.orders):
            yield Enumeration(self.ground, order)

    def __len__(self) -> int:
        return len(self.orders)

    def __bool__(self) -> bool:
        return bool(self.orders)

    def __contains__(self, item) -> bool:
        order = item.order if isinstance(item, Enumeration) else tuple(item)
        return order in self.orders

    def __or__(self, other: "EnumSet") -> "EnumSet":
        self.ground.check_same(other.ground)
        return EnumSet(self.ground, self.orders | other.orders)

    def __and__(self, other: "EnumSet") -> "EnumSet":
        self.ground.check_same(other.ground)
        return EnumSet(self.ground, self.orders & other.orders)

    def __sub__(self, other: "EnumSet") -> "EnumSet":
        self.ground.check_same(other.ground)
        return EnumSet(self.ground, self.orders - other.orders)

    def __le__(self, other: "EnumSet") -> bool:
        self.ground.check_same(other.ground)
        return self.orders <= other.orders

    def __lt__(self, other: "EnumSet") -> bool:
        self.ground.check_same(other.ground)
        return self.orders < other.orders

    def isdisjoint(self, other: "EnumSet") -> bool:
        return self.orders.isdisjoint(other.orders)

    def sorted_orders(self) -> List[Tuple[int, ...]]:
        return sorted(self.orders)
