import asyncio
import logging
from typing import Any, Dict

import networkx as nx

from ..combinatorics.permutograph import permutohedral_graph, to_dot
from ..exceptions import InvalidInputError
from ..games.faces import descriptors, face_contains, theorem_report
from ..serialization import bundle_to_dict, report_to_dict
from .base_command import BaseCommand, game_argument

logger = logging.getLogger(__name__)


class ConvertCommand(BaseCommand):
    """Print the five face descriptors of a supermodular game."""

    name = "convert"

    async def execute(self, data: dict) -> Dict[str, Any]:
        game = game_argument(data, "game")
        bundle = await asyncio.to_thread(descriptors, game)
        logger.info(f"Descriptors built: {len(bundle.en_part)} blocks, {len(bundle.in_str)} CI triplets")
        return bundle_to_dict(bundle)


class CompareCommand(BaseCommand):
    """Decide whether game A lies in the face generated by game B, by every descriptor."""

    name = "compare"

    async def execute(self, data: dict) -> Dict[str, Any]:
        game_a = game_argument(data, "game")
        game_b = game_argument(data, "game_b")
        report = await asyncio.to_thread(theorem_report, game_a, game_b)
        result = report_to_dict(report)
        result["i"] = face_contains(game_b, game_a)
        result["agreement"] = report.agreement and result["i"] == report.vii
        return result


class GraphCommand(BaseCommand):
    """The permutohedral subgraph of a game, as DOT text or as a JSON edge list."""

    name = "graph"

    async def execute(self, data: dict) -> Dict[str, Any]:
        game = game_argument(data, "game")
        output_format = data.get("format", "dot")
        if output_format not in ("dot", "json"):
            raise InvalidInputError(f"Unknown graph format {output_format!r}; use 'dot' or 'json'.")
        bundle = await asyncio.to_thread(descriptors, game)
        graph = nx.Graph()
        ambient = permutohedral_graph(game.ground)
        graph.add_nodes_from(ambient.nodes)
        for edge in bundle.per_sg_edges:
            left, right = sorted(edge)
            graph.add_edge(left, right, **ambient.edges[left, right])
        if output_format == "dot":
            return {"dot": to_dot(graph, game.ground, name="PerSG")}
        return {"per_sg": bundle_to_dict(bundle)["per_sg"], "components": nx.number_connected_components(graph)}
