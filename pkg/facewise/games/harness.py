"""Randomized cross-check that every face-inclusion test gives the same answer."""
import asyncio
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..config import get_settings
from ..data_models import FaceReport, Game
from ..exceptions import InvalidInputError
from .faces import face_contains, theorem_report
from .random_games import make_rng, random_supermodular

logger = logging.getLogger(__name__)

PAIR_KINDS = ("independent", "b_extends_a", "a_extends_b")


@dataclass(frozen=True)
class TrialResult:
    index: int
    kind: str
    game_a: Game
    game_b: Game
    report: FaceReport
    face_contains: bool

    @property
    def consistent(self) -> bool:
        return self.report.agreement and self.face_contains == self.report.vii


@dataclass
class HarnessSummary:
    n: int
    trials: int
    seed: int
    results: List[TrialResult] = field(default_factory=list)

    @property
    def disagreements(self) -> List[TrialResult]:
        return [result for result in self.results if not result.consistent]

    @property
    def holds(self) -> int:
        """Pairs for which A lies in the face generated by B."""
        return sum(1 for result in self.results if result.report.vii)

    @property
    def passed(self) -> bool:
        return not self.disagreements


def draw_pair(seed_sequence: np.random.SeedSequence, n: int, kind: str) -> Tuple[Game, Game]:
    rng = make_rng(seed_sequence)
    first = random_supermodular(rng, n)
    second = random_supermodular(rng, n)
    if kind == "independent":
        return first, second
    if kind == "b_extends_a":
        return first, first + second
    if kind == "a_extends_b":
        return first + second, first
    raise InvalidInputError(f"Unknown pair kind {kind!r}; expected one of {PAIR_KINDS}.")


def run_trial(index: int, seed_sequence: np.random.SeedSequence, n: int) -> TrialResult:
    kind = PAIR_KINDS[index % len(PAIR_KINDS)]
    game_a, game_b = draw_pair(seed_sequence, n, kind)
    report = theorem_report(game_a, game_b)
    result = TrialResult(index, kind, game_a, game_b, report, face_contains(game_b, game_a))
    if not result.consistent:
        logger.error(f"Trial {index} ({kind}) disagrees: {report.as_dict()}")
    return result


def _run_chunk(chunk: Sequence[Tuple[int, np.random.SeedSequence]], n: int) -> List[TrialResult]:
    return [run_trial(index, sequence, n) for index, sequence in chunk]


async def run_theorem_harness(
    n: int,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> HarnessSummary:
    """Run ``trials`` seeded random pairs in worker threads; results come back in trial order."""
    settings = get_settings()
    trials = settings.trials_for(n) if trials is None else trials
    seed = settings.default_seed if seed is None else seed
    workers = max(1, settings.harness_workers if workers is None else workers)
    if trials < 0:
        raise InvalidInputError(f"Number of trials must be non-negative, got {trials}.")

    indexed = list(enumerate(np.random.SeedSequence(seed).spawn(trials)))
    chunks = [indexed[i::workers] for i in range(workers) if indexed[i::workers]]
    logger.info(f"Running {trials} random pairs at n={n} (seed {seed}) on {len(chunks)} workers")
    chunk_results = await asyncio.gather(*(asyncio.to_thread(_run_chunk, chunk, n) for chunk in chunks))

    results = sorted((result for chunk in chunk_results for result in chunk), key=lambda result: result.index)
    summary = HarnessSummary(n=n, trials=trials, seed=seed, results=results)
    logger.info(f"Harness finished: {len(summary.disagreements)} disagreements, "
                f"{summary.holds}/{trials} pairs with face inclusion")
    return summary
