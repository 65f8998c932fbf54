"""polyaccess package initializer.

The command line interface lives in the ``polyaccess.py`` module next to this
package in the distribution. It is loaded by file location so that ``import
polyaccess`` exposes the same API whichever of the two is imported first.
"""

from importlib.util import module_from_spec, spec_from_file_location
from pathlib import Path

_cli_path = Path(__file__).resolve().parent.parent / "polyaccess.py"
_spec = spec_from_file_location("polyaccess_cli", _cli_path)
_cli = module_from_spec(_spec)
_spec.loader.exec_module(_cli)

CommandBase = _cli.CommandBase
IndexCommand = _cli.IndexCommand
SingularCommand = _cli.SingularCommand
BoundCommand = _cli.BoundCommand
StrongCommand = _cli.StrongCommand
RankCommand = _cli.RankCommand
ImmerseCommand = _cli.ImmerseCommand
FullCommand = _cli.FullCommand
COMMANDS = _cli.COMMANDS
build_parser = _cli.build_parser
main = _cli.main

__all__ = [
    "COMMANDS",
    "BoundCommand",
    "CommandBase",
    "FullCommand",
    "ImmerseCommand",
    "IndexCommand",
    "RankCommand",
    "SingularCommand",
    "StrongCommand",
    "build_parser",
    "main",
]
