import asyncio
import logging
from typing import Any, Dict

from ..catalog import example_checks
from ..games.harness import run_theorem_harness
from ..games.rays import extreme_rays
from ..serialization import game_to_dict, report_to_dict
from .base_command import BaseCommand, int_argument

logger = logging.getLogger(__name__)


class VerifyCommand(BaseCommand):
    """Randomized agreement check of all face-inclusion tests."""

    name = "verify"

    async def execute(self, data: dict) -> Dict[str, Any]:
        n = int_argument(data, "n")
        trials = data.get("trials")
        seed = int_argument(data, "seed", self.settings.default_seed)
        workers = data.get("workers") or self.settings.harness_workers
        summary = await run_theorem_harness(n, trials=trials, seed=seed, workers=workers)
        return {
            "n": summary.n,
            "trials": summary.trials,
            "seed": summary.seed,
            "face_inclusions": summary.holds,
            "disagreements": [
                {
                    "trial": result.index,
                    "kind": result.kind,
                    "game_a": game_to_dict(result.game_a),
                    "game_b": game_to_dict(result.game_b),
                    "report": report_to_dict(result.report),
                    "i": result.face_contains,
                }
                for result in summary.disagreements
            ],
            "passed": summary.passed,
        }


class RaysCommand(BaseCommand):
    """Extreme rays of the standardized supermodular cone."""

    name = "rays"

    async def execute(self, data: dict) -> Dict[str, Any]:
        n = int_argument(data, "n")
        force = bool(data.get("force", False))
        rays = await asyncio.to_thread(extreme_rays, n, force)
        return {"n": n, "count": len(rays), "rays": [game_to_dict(ray) for ray in rays]}


class ExamplesCommand(BaseCommand):
    """Replay the worked examples and compare with their published values."""

    name = "examples"

    async def execute(self, data: dict) -> Dict[str, Any]:
        checks = await asyncio.to_thread(example_checks)
        return {
            "checks": [
                {
                    "example": check.example,
                    "quantity": check.quantity,
                    "expected": check.expected,
                    "actual": check.actual,
                    "status": "PASS" if check.passed else "FAIL",
                }
                for check in checks
            ],
            "passed": all(check.passed for check in checks),
        }
