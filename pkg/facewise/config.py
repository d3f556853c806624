import logging
import os
from dataclasses import dataclass, field, replace
from typing import Dict

logger = logging.getLogger(__name__)

ENV_PREFIX = "FACEWISE_"


@dataclass(frozen=True)
class Settings:
    """Guard rails and defaults shared by the library and the CLI.

    Every field can be overridden through a ``FACEWISE_<FIELD_NAME>`` environment
    variable (upper case), e.g. ``FACEWISE_MAX_ENUMERATION_N=6``.
    """

    max_enumeration_n: int = 8
    max_dimension_n: int = 6
    max_exhaustive_n: int = 4
    max_rays_n: int = 4
    max_forced_rays_n: int = 5
    default_seed: int = 0
    default_trials: Dict[int, int] = field(default_factory=lambda: {3: 500, 4: 200})
    harness_workers: int = 4
    random_max_terms: int = 4
    random_max_coeff: int = 3
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls, environ=None) -> "Settings":
        environ = os.environ if environ is None else environ
        settings = cls()
        overrides = {}
        for name in ("max_enumeration_n", "max_dimension_n", "max_exhaustive_n", "max_rays_n",
                     "max_forced_rays_n", "default_seed", "harness_workers",
                     "random_max_terms", "random_max_coeff"):
            raw = environ.get(ENV_PREFIX + name.upper())
            if raw is None:
                continue
            try:
                overrides[name] = int(raw)
            except ValueError:
                logger.warning(f"Ignoring non-integer {ENV_PREFIX + name.upper()}={raw!r}")
        level = environ.get(ENV_PREFIX + "LOG_LEVEL")
        if level:
            overrides["log_level"] = level.upper()
        return replace(settings, **overrides) if overrides else settings

    def trials_for(self, n: int) -> int:
        return self.default_trials.get(n, 100)


_settings = Settings.from_env()


def get_settings() -> Settings:
    return _settings


def configure_logging(level: str = None) -> None:
    """Configure root logging once for CLI runs; library modules only create loggers."""
    level_name = (level or _settings.log_level).upper()
    logging.basicConfig(
        level=getattr(logging, level_name, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
