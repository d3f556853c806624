import logging
from abc import ABC, abstractmethod
from typing import Any, Dict

from ..config import Settings, get_settings
from ..data_models import Game
from ..exceptions import FacewiseError, InvalidInputError
from ..serialization import game_from_dict, load_game

logger = logging.getLogger(__name__)


class BaseCommand(ABC):
    """One CLI sub-command; ``process`` turns its outcome into a status dictionary.

    Successful runs return ``{"status": "success", "command", "result", "exit_code": 0}``.
    Library errors become ``{"status": "failure", "command", "error", "exit_code"}`` with the
    exit code of the exception; a result whose ``passed`` flag is false is reported as a
    failure with exit code 1 and keeps its result.
    """

    name = "command"

    def __init__(self, settings: Settings = None):
        self.settings = settings or get_settings()
        logger.info(f"{self.name} command initialized.")

    async def process(self, data: dict) -> dict:
        try:
            result = await self.execute(data)
        except FacewiseError as exc:
            logger.error(f"{self.name} failed: {exc}")
            return {"status": "failure", "command": self.name, "error": str(exc), "exit_code": exc.exit_code}
        if result.get("passed") is False:
            logger.warning(f"{self.name} finished with failed checks.")
            return {"status": "failure", "command": self.name, "result": result, "exit_code": 1}
        return {"status": "success", "command": self.name, "result": result, "exit_code": 0}

    @abstractmethod
    async def execute(self, data: dict) -> Dict[str, Any]:
        """
        Run the command on ``data`` and return its JSON-ready result.

        Raises:
            FacewiseError: for malformed input, guard violations or failed cross-checks.
        """
        pass


def game_argument(data: dict, key: str) -> Game:
    """A game given either as a path to a JSON document or as the document itself."""
    value = data.get(key)
    if value is None:
        raise InvalidInputError(f"Missing required game input '{key}'.")
    if isinstance(value, dict):
        return game_from_dict(value)
    return load_game(value)


def int_argument(data: dict, key: str, default: int = None) -> int:
    value = data.get(key)
    if value is None:
        value = default
    if value is None:
        raise InvalidInputError(f"Missing required integer input '{key}'.")
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInputError(f"'{key}' must be an integer, got {value!r}.")
    return value
