import argparse
import asyncio
import logging
import sys
from dataclasses import asdict, dataclass
from typing import List, Optional

from .commands import COMMANDS
from .config import configure_logging
from .serialization import dumps

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CliConfig:
    command: str
    n: Optional[int] = None
    seed: Optional[int] = None
    game: Optional[str] = None
    game_b: Optional[str] = None
    trials: Optional[int] = None
    format: str = "json"
    force: bool = False
    poset: Optional[str] = None
    workers: Optional[int] = None
    log_level: Optional[str] = None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="facewise",
        description="Combinatorial descriptions of faces of the supermodular cone.",
    )
    parser.add_argument("--log-level", default=None, help="Logging level for stderr (default from FACEWISE_LOG_LEVEL).")
    commands = parser.add_subparsers(dest="command", required=True)

    convert = commands.add_parser("convert", help="Print the face descriptors of a game.")
    convert.add_argument("--game", required=True, help="Game JSON document.")

    compare = commands.add_parser("compare", help="Test whether game A lies in the face generated by game B.")
    compare.add_argument("--game", required=True, help="Game A JSON document.")
    compare.add_argument("--game-b", required=True, help="Game B JSON document.")

    verify = commands.add_parser("verify", help="Randomized agreement harness for the face-inclusion tests.")
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--trials", type=int, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--workers", type=int, default=None)

    count = commands.add_parser("count", help="Count posets, preposets, topologies and ordered partitions.")
    count.add_argument("--n", type=int, required=True)

    rays = commands.add_parser("rays", help="Extreme rays of the standardized supermodular cone.")
    rays.add_argument("--n", type=int, required=True)
    rays.add_argument("--force", action="store_true", help="Allow the long-running n=5 enumeration.")

    poset = commands.add_parser("poset", help="Linear extensions, dimension and Hasse diagram of a poset.")
    poset.add_argument("--poset", default=None, help="Relation JSON document (default: the six-element example).")

    commands.add_parser("examples", help="Replay the worked examples and check their published values.")

    graph = commands.add_parser("graph", help="Permutohedral subgraph of a game.")
    graph.add_argument("--game", required=True, help="Game JSON document.")
    graph.add_argument("--format", choices=("dot", "json"), default="dot")
    return parser


def parse_config(argv: Optional[List[str]] = None) -> CliConfig:
    namespace = vars(build_parser().parse_args(argv))
    known = set(CliConfig.__dataclass_fields__)
    return CliConfig(**{key: value for key, value in namespace.items() if key in known})


async def run(config: CliConfig) -> int:
    command = COMMANDS[config.command]()
    data = {key: value for key, value in asdict(config).items() if key not in ("command", "log_level")}
    outcome = await command.process(data)
    if outcome["status"] != "success" and "result" not in outcome:
        print(f"error: {outcome['error']}", file=sys.stderr)
        return outcome["exit_code"]
    result = outcome["result"]
    if config.command == "graph" and "dot" in result:
        print(result["dot"])
    else:
        print(dumps(result))
    return outcome["exit_code"]


def main(argv: Optional[List[str]] = None) -> int:
    config = parse_config(argv)
    configure_logging(config.log_level)
    logger.info(f"Running {config.command}")
    return asyncio.run(run(config))


def run_cli():
    sys.exit(main())


if __name__ == "__main__":
    run_cli()
