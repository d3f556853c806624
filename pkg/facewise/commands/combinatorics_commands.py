import asyncio
import logging
from typing import Any, Dict

from ..catalog import six_element_poset
from ..combinatorics.permutograph import ordered_partitions
from ..combinatorics.relations import count_relation_classes, hasse, linear_extensions, poset_dimension
from ..combinatorics.setsystems import count_linear_extensions, count_topologies
from ..data_models import GroundSet
from ..exceptions import VerificationError
from ..serialization import enum_set_to_list, load_relation, relation_to_dict
from .base_command import BaseCommand, int_argument

logger = logging.getLogger(__name__)


def _counts(n: int) -> Dict[str, int]:
    relations = count_relation_classes(n)
    topologies = count_topologies(n)
    if topologies != relations.preposets:
        raise VerificationError(f"n={n}: {topologies} topologies but {relations.preposets} preposets.")
    partitions = len(ordered_partitions(GroundSet.of_size(n)))
    if partitions != relations.total_preposets:
        raise VerificationError(f"n={n}: {partitions} ordered partitions but {relations.total_preposets} total preposets.")
    return {
        "n": n,
        "posets": relations.posets,
        "preposets": relations.preposets,
        "topologies": topologies,
        "ordered_partitions": partitions,
    }


class CountCommand(BaseCommand):
    """Exhaustive counts of posets, preposets, topologies and ordered partitions."""

    name = "count"

    async def execute(self, data: dict) -> Dict[str, Any]:
        n = int_argument(data, "n")
        return await asyncio.to_thread(_counts, n)


class PosetCommand(BaseCommand):
    """Linear extensions, their number, the dimension and the Hasse diagram of a poset."""

    name = "poset"

    async def execute(self, data: dict) -> Dict[str, Any]:
        path = data.get("poset")
        poset = load_relation(path) if path else six_element_poset()
        return await asyncio.to_thread(self._describe, poset)

    @staticmethod
    def _describe(poset) -> Dict[str, Any]:
        extensions = linear_extensions(poset)
        counted = count_linear_extensions(poset)
        if counted != len(extensions):
            raise VerificationError(f"Down-set count {counted} differs from {len(extensions)} linear extensions.")
        return {
            "ground": list(poset.ground.labels),
            "linear_extensions": enum_set_to_list(extensions),
            "count": counted,
            "dimension": poset_dimension(poset),
            "hasse": relation_to_dict(hasse(poset))["pairs"],
        }
