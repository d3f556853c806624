from .base_command import BaseCommand
from .combinatorics_commands import CountCommand, PosetCommand
from .game_commands import CompareCommand, ConvertCommand, GraphCommand
from .verification_commands import ExamplesCommand, RaysCommand, VerifyCommand

COMMANDS = {
    command.name: command
    for command in (
        ConvertCommand,
        CompareCommand,
        VerifyCommand,
        CountCommand,
        RaysCommand,
        PosetCommand,
        ExamplesCommand,
        GraphCommand,
    )
}

__all__ = [
    "BaseCommand",
    "COMMANDS",
    "CompareCommand",
    "ConvertCommand",
    "CountCommand",
    "ExamplesCommand",
    "GraphCommand",
    "PosetCommand",
    "RaysCommand",
    "VerifyCommand",
]
