"""Worked examples with published values, replayed by the ``examples`` command."""
import logging
from dataclasses import dataclass
from typing import Any, List, Tuple

from .combinatorics.permutograph import diameter, inversions_in_set
from .combinatorics.relations import hasse, linear_extensions, poset_dimension
from .combinatorics.setsystems import count_linear_extensions, is_topology
from .data_models import ElementaryTriplet, Enumeration, Game, GroundSet, RationalVector, Relation, SetSystem
from .games.faces import flats_partition, is_extreme, is_polymatroid, submodular_reflect
from .games.games import core_vertices, delta, exactness_check, marginal_vector, tightness_class

logger = logging.getLogger(__name__)

ABC = GroundSet(("a", "b", "c"))
ABCDE = GroundSet(("a", "b", "c", "d", "e"))
ABCDEF = GroundSet(("a", "b", "c", "d", "e", "f"))
SIX_ELEMENT_ARROWS = (("a", "e"), ("a", "f"), ("b", "d"), ("b", "f"), ("c", "d"), ("c", "e"))


@dataclass(frozen=True)
class ExampleCheck:
    example: str
    quantity: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


def six_element_poset() -> Relation:
    """The dimension-3 poset: each of a, b, c lies below two of d, e, f."""
    return Relation.from_label_pairs(ABCDEF, SIX_ELEMENT_ARROWS) | Relation.diagonal(ABCDEF)


def marginal_example_game() -> Game:
    """2 delta_N plus delta_S for every two-element S, on {a, b, c}."""
    values = {ABC.full_mask: 2}
    values.update({ABC.mask_of(pair): 1 for pair in ("ab", "ac", "bc")})
    return Game.from_mapping(ABC, values)


def tightness_counterexample_game() -> Game:
    """A non-supermodular game whose tightness class at (1, 1, 1) is not closed under intersection."""
    return Game.from_mapping(ABC, {
        ABC.full_mask: 3,
        ABC.mask_of("ac"): 2,
        ABC.mask_of("bc"): 2,
        ABC.mask_of("a"): 1,
        ABC.mask_of("b"): -1,
    })


def twin_polymatroids() -> Tuple[Game, Game]:
    """Two distinct extreme polymatroids on five elements with the same lattice of flats."""
    special = {"a": 2, "ab": 5, "bc": 8, "abd": 7, "abe": 7, "ace": 7, "ade": 7}

    def rank(mask: int) -> int:
        key = "".join(ABCDE.labels_of(mask))
        if key in special:
            return special[key]
        size = len(key)
        return {0: 0, 1: 4, 2: 6}.get(size, 8)

    h = Game.from_function(ABCDE, rank)
    h_prime = Game.from_function(ABCDE, lambda mask: 3 if mask == ABCDE.mask_of("a") else rank(mask))
    return h, h_prime


def _poset_checks() -> List[ExampleCheck]:
    poset = six_element_poset()
    extensions = linear_extensions(poset)
    name = "six-element poset"
    return [
        ExampleCheck(name, "|L(T)|", 48, len(extensions)),
        ExampleCheck(name, "|L(T)| by down-set counting", 48, count_linear_extensions(poset)),
        ExampleCheck(name, "|Inv(S)|", 9, len(inversions_in_set(extensions))),
        ExampleCheck(name, "diam(S)", 8, diameter(extensions)),
        ExampleCheck(name, "dimension", 3, poset_dimension(poset)),
        ExampleCheck(name, "Hasse arrows", sorted(SIX_ELEMENT_ARROWS), sorted(hasse(poset).format_pairs())),
    ]


def _marginal_checks() -> List[ExampleCheck]:
    game = marginal_example_game()
    cba = Enumeration.parse(ABC, "|c|b|a|")
    cab = Enumeration.parse(ABC, "|c|a|b|")
    vertices = core_vertices(game)
    vertex = marginal_vector(game, cba)
    name = "marginal vector example"
    return [
        ExampleCheck(name, "m(|c|b|a|)", "[1,1,0]", str(vertex)),
        ExampleCheck(name, "|c|a|b| in the same fiber", True, cab in vertices[vertex]),
        ExampleCheck(name, "core vertices", 3, len(vertices)),
        ExampleCheck(name, "exact", True, exactness_check(game)),
    ]


def _counterexample_checks() -> List[ExampleCheck]:
    game = tightness_counterexample_game()
    tight = tightness_class(game, RationalVector(ABC, (1, 1, 1)))
    expected = SetSystem.from_label_sets(ABC, ["", "a", "ac", "bc", "abc"])
    name = "tightness counterexample"
    return [
        ExampleCheck(name, "delta(a,b|c)", -1, int(delta(game, ElementaryTriplet(0, 1, ABC.mask_of("c"))))),
        ExampleCheck(name, "tightness class at (1,1,1)", expected.format(), tight.format()),
        ExampleCheck(name, "closed under intersection and union", False, is_topology(tight)),
    ]


def _twin_polymatroid_checks() -> List[ExampleCheck]:
    h, h_prime = twin_polymatroids()
    name = "twin polymatroids"
    return [
        ExampleCheck(name, "h != h'", True, h != h_prime),
        ExampleCheck(name, "both polymatroids", True, is_polymatroid(h) and is_polymatroid(h_prime)),
        ExampleCheck(name, "both extreme", True,
                     is_extreme(submodular_reflect(h)) and is_extreme(submodular_reflect(h_prime))),
        ExampleCheck(name, "same flats equivalence", True, flats_partition(h) == flats_partition(h_prime)),
    ]


def example_checks() -> List[ExampleCheck]:
    checks = _poset_checks() + _marginal_checks() + _counterexample_checks() + _twin_polymatroid_checks()
    for check in checks:
        if not check.passed:
            logger.error(f"{check.example}: {check.quantity} expected {check.expected}, got {check.actual}")
    return checks
