from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Tuple, Union

from ..exceptions import InvalidInputError
from .ground import GroundSet, Subset, members_of

Scalar = Union[int, Fraction]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InvalidInputError(f"Expected an exact rational, got {value!r}.")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"Not a rational number: {value!r}.") from exc


@dataclass(frozen=True)
class RationalVector:
    """A vector in Q^N with one exact entry per ground element (indexed by ground index)."""

    ground: GroundSet
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(_as_fraction(value) for value in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.ground.n:
            raise InvalidInputError(f"Vector has {len(entries)} entries for a ground set of size {self.ground.n}.")

    @classmethod
    def zero(cls, ground: GroundSet) -> "RationalVector":
        return cls(ground, (Fraction(0),) * ground.n)

    @classmethod
    def indicator(cls, ground: GroundSet, mask: Subset) -> "RationalVector":
        """The incidence vector chi_A of the subset ``mask``."""
        return cls(ground, tuple(Fraction(mask >> i & 1) for i in range(ground.n)))

    @classmethod
    def from_mapping(cls, ground: GroundSet, values: Mapping[str, Scalar]) -> "RationalVector":
        if set(values) != set(ground.labels):
            raise InvalidInputError(f"Vector keys {sorted(values)} do not match ground set {list(ground.labels)}.")
        return cls(ground, tuple(values[label] for label in ground.labels))

    def __getitem__(self, index: int) -> Fraction:
        return self.entries[index]

    def __iter__(self):
        return iter(self.entries)

    def __add__(self, other: "RationalVector") -> "RationalVector":
        self.ground.check_same(other.ground)
        return RationalVector(self.ground, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "RationalVector") -> "RationalVector":
        self.ground.check_same(other.ground)
        return RationalVector(self.ground, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "RationalVector":
        return RationalVector(self.ground, tuple(-a for a in self.entries))

    def __mul__(self, scalar: Scalar) -> "RationalVector":
        factor = _as_fraction(scalar)
        return RationalVector(self.ground, tuple(factor * a for a in self.entries))

    __rmul__ = __mul__

    def total(self) -> Fraction:
        return sum(self.entries, Fraction(0))

    def sum_over(self, mask: Subset) -> Fraction:
        """Sum of the entries over the subset ``mask``."""
        return sum((self.entries[i] for i in members_of(mask)), Fraction(0))

    def as_dict(self) -> Dict[str, Fraction]:
        return dict(zip(self.ground.labels, self.entries))

    def __str__(self) -> str:
        return "[" + ",".join(str(value) for value in self.entries) + "]"


@dataclass(frozen=True)
class Game:
    """An exact set function over N with value 0 at the empty set.

    ``values[mask]`` is the value at the subset encoded by ``mask``.
    """

    ground: GroundSet
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(_as_fraction(value) for value in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != 1 << self.ground.n:
            raise InvalidInputError(f"A game over {self.ground.n} elements needs {1 << self.ground.n} values, got {len(values)}.")
        if values[0] != 0:
            raise InvalidInputError(f"A game must vanish at the empty set, got {values[0]}.")

    @classmethod
    def from_function(cls, ground: GroundSet, function: Callable[[Subset], Scalar]) -> "Game":
        return cls(ground, tuple(function(mask) for mask in ground.subsets()))

    @classmethod
    def from_mapping(cls, ground: GroundSet, values: Mapping[Subset, Scalar]) -> "Game":
        """Game from a sparse map; subsets absent from ``values`` get 0."""
        return cls(ground, tuple(values.get(mask, 0) for mask in ground.subsets()))

    def __call__(self, mask: Subset) -> Fraction:
        return self.values[mask]

    def __add__(self, other: "Game") -> "Game":
        self.ground.check_same(other.ground)
        return Game(self.ground, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "Game") -> "Game":
        self.ground.check_same(other.ground)
        return Game(self.ground, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "Game":
        return Game(self.ground, tuple(-a for a in self.values))

    def __mul__(self, scalar: Scalar) -> "Game":
        factor = _as_fraction(scalar)
        return Game(self.ground, tuple(factor * a for a in self.values))

    __rmul__ = __mul__

    def items(self) -> Iterable[Tuple[Subset, Fraction]]:
        return enumerate(self.values)


@dataclass(frozen=True)
class ElementaryTriplet:
    """The elementary triplet (a, b | C), stored with a < b."""

    a: int
    b: int
    c: Subset

    def __post_init__(self):
        if self.a == self.b:
            raise InvalidInputError("An elementary triplet needs distinct a and b.")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)
        if self.c >> self.a & 1 or self.c >> self.b & 1:
            raise InvalidInputError("The conditioning set of a triplet must avoid a and b.")

    def sort_key(self) -> Tuple[int, Tuple[int, ...], int, int]:
        return bin(self.c).count("1"), tuple(members_of(self.c)), self.a, self.b

    def format(self, ground: GroundSet) -> str:
        labels = ground.labels
        return f"({labels[self.a]},{labels[self.b]}|{''.join(ground.labels_of(self.c))})"


@dataclass(frozen=True)
class ElementaryImset:
    """The integer vector u_(a,b|C) = delta_abC + delta_C - delta_aC - delta_bC."""

    triplet: ElementaryTriplet

    @property
    def coefficients(self) -> Dict[Subset, int]:
        t = self.triplet
        a, b = 1 << t.a, 1 << t.b
        return {t.c | a | b: 1, t.c: 1, t.c | a: -1, t.c | b: -1}

    def pair_with(self, game: Game) -> Fraction:
        """Scalar product with a game, i.e. the supermodular difference."""
        return sum((coefficient * game(mask) for mask, coefficient in self.coefficients.items()), Fraction(0))
