"""JSON documents for games, relations, set systems, descriptor bundles and reports.

Rationals are written as reduced "p/q" strings (q > 0); on input plain integers and "p"
strings are accepted too. Every collection is written in a canonical order so that equal
objects always serialize to identical text.
"""
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Union

from .data_models import (
    CONDITION_KEYS,
    ElementaryTriplet,
    EnumSet,
    Enumeration,
    FaceDescriptorBundle,
    FaceReport,
    Game,
    GroundSet,
    RationalVector,
    Relation,
    SetSystem,
    subset_sort_key,
)
from .exceptions import InvalidInputError


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(raw: Any) -> Fraction:
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise InvalidInputError(f"Rationals must be integers or 'p/q' strings, got {raw!r}.")
    try:
        return Fraction(raw.strip() if isinstance(raw, str) else raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"Not a rational number: {raw!r}.") from exc


def _ground_from(document: Dict[str, Any]) -> GroundSet:
    labels = document.get("ground")
    if not isinstance(labels, list):
        raise InvalidInputError("Document needs a 'ground' list of labels.")
    return GroundSet(tuple(labels))


def _require_mapping(document: Any, what: str) -> Dict[str, Any]:
    if not isinstance(document, dict):
        raise InvalidInputError(f"{what} document must be a JSON object.")
    return document


def game_to_dict(game: Game) -> Dict[str, Any]:
    ground = game.ground
    return {
        "ground": list(ground.labels),
        "values": [
            {"set": ground.labels_of(mask), "value": format_rational(game(mask))}
            for mask in sorted(ground.subsets(), key=subset_sort_key)
        ],
    }


def game_from_dict(document: Any) -> Game:
    document = _require_mapping(document, "Game")
    ground = _ground_from(document)
    entries = document.get("values")
    if not isinstance(entries, list):
        raise InvalidInputError("Game document needs a 'values' list.")
    values: Dict[int, Fraction] = {}
    for entry in entries:
        entry = _require_mapping(entry, "Game value")
        if "set" not in entry or "value" not in entry:
            raise InvalidInputError(f"Game value entry {entry!r} needs 'set' and 'value'.")
        mask = ground.mask_of(entry["set"])
        if mask in values:
            raise InvalidInputError(f"Duplicate game entry for {ground.format_subset(mask)}.")
        values[mask] = parse_rational(entry["value"])
    missing = [ground.format_subset(mask) for mask in ground.subsets() if mask not in values]
    if missing:
        raise InvalidInputError(f"Game document misses values for {', '.join(missing)}.")
    return Game(ground, tuple(values[mask] for mask in ground.subsets()))


def relation_to_dict(relation: Relation) -> Dict[str, Any]:
    diagonal = Relation.diagonal(relation.ground)
    return {
        "ground": list(relation.ground.labels),
        "reflexive": diagonal <= relation,
        "pairs": [list(pair) for pair in relation.format_pairs()],
    }


def relation_from_dict(document: Any) -> Relation:
    document = _require_mapping(document, "Relation")
    ground = _ground_from(document)
    pairs = document.get("pairs", [])
    if not isinstance(pairs, list) or any(not isinstance(pair, list) or len(pair) != 2 for pair in pairs):
        raise InvalidInputError("Relation 'pairs' must be a list of [u, v] label pairs.")
    relation = Relation.from_label_pairs(ground, [tuple(pair) for pair in pairs])
    if document.get("reflexive", True):
        relation = relation | Relation.diagonal(ground)
    return relation


def set_system_to_list(system: SetSystem) -> List[List[str]]:
    return [system.ground.labels_of(mask) for mask in system]


def set_system_from_list(ground: GroundSet, sets: Any) -> SetSystem:
    if not isinstance(sets, list):
        raise InvalidInputError("A set system is a list of label arrays.")
    return SetSystem.from_label_sets(ground, sets)


def vector_to_dict(vector: RationalVector) -> Dict[str, str]:
    return {label: format_rational(value) for label, value in vector.as_dict().items()}


def vector_from_dict(ground: GroundSet, document: Any) -> RationalVector:
    document = _require_mapping(document, "Vector")
    return RationalVector.from_mapping(ground, {label: parse_rational(raw) for label, raw in document.items()})


def enum_set_to_list(s: EnumSet) -> List[str]:
    return [str(pi) for pi in s]


def triplet_to_dict(triplet: ElementaryTriplet, ground: GroundSet) -> Dict[str, Any]:
    return {"a": ground.labels[triplet.a], "b": ground.labels[triplet.b], "C": ground.labels_of(triplet.c)}


def triplet_from_dict(ground: GroundSet, document: Any) -> ElementaryTriplet:
    document = _require_mapping(document, "Triplet")
    try:
        return ElementaryTriplet(ground.index(document["a"]), ground.index(document["b"]), ground.mask_of(document["C"]))
    except KeyError as exc:
        raise InvalidInputError(f"Triplet document misses {exc}.") from None


def bundle_to_dict(bundle: FaceDescriptorBundle) -> Dict[str, Any]:
    ground = bundle.ground

    def enum_text(order) -> str:
        return str(Enumeration(ground, order))

    blocks = sorted((block.sorted_orders() for block in bundle.en_part))
    posets = sorted(relation_to_dict(poset)["pairs"] for poset in bundle.fan_pos)
    topologies = sorted(set_system_to_list(system) for system in bundle.ti_str)
    edges = sorted(tuple(sorted(edge)) for edge in bundle.per_sg_edges)
    return {
        "ground": list(ground.labels),
        "en_part": [[enum_text(order) for order in block] for block in blocks],
        "fan_pos": posets,
        "ti_str": topologies,
        "in_str": [triplet_to_dict(t, ground) for t in sorted(bundle.in_str, key=ElementaryTriplet.sort_key)],
        "per_sg": [[enum_text(left), enum_text(right)] for left, right in edges],
    }


def report_to_dict(report: FaceReport) -> Dict[str, bool]:
    values = report.as_dict()
    return {key: values[key] for key in CONDITION_KEYS}


def dumps(document: Any) -> str:
    return json.dumps(document, indent=2)


def load_json(path: Union[str, Path]) -> Any:
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InvalidInputError(f"Cannot read {path}: {exc.strerror}.") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path} is not valid JSON: {exc.msg} (line {exc.lineno}).") from exc


def load_game(path: Union[str, Path]) -> Game:
    return game_from_dict(load_json(path))


def load_relation(path: Union[str, Path]) -> Relation:
    return relation_from_dict(load_json(path))
