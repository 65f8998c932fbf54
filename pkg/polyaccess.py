"""Command line interface for polyaccess."""

import argparse
import logging
import sys

import runner
from polyaccess.analysis.render import render_structured, render_text
from polyaccess.conf import settings
from polyaccess.core.exceptions import PolyaccessError
from polyaccess.poly.core import ORDERS

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_CAP_REACHED = 3


class CommandBase:
    """Base class for CLI commands."""

    name: str = ""
    help: str = ""

    @classmethod
    def handler(cls, subparsers: argparse._SubParsersAction) -> None:
        parser = subparsers.add_parser(cls.name, help=cls.help)
        cls.common_arguments(parser)
        cls.add_arguments(parser)
        parser.set_defaults(command=cls())

    @classmethod
    def common_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("file", help="system description file")
        parser.add_argument("--order", choices=sorted(ORDERS))
        parser.add_argument("--max-depth", type=int, dest="max_depth")
        parser.add_argument("--seed", type=int)
        parser.add_argument("--format", choices=["text", "structured"], dest="output_format")
        parser.add_argument("--strict", action="store_true", help="exit 3 when a depth cap is reached")
        parser.add_argument("-v", "--verbose", action="count", default=0)

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        """Register command specific arguments."""
        pass

    def options(self, args: argparse.Namespace) -> dict:
        return {}

    def run(self, args: argparse.Namespace) -> int:
        system_file = runner.load(args.file, order=args.order)
        runner.configure(system_file.options, max_depth=args.max_depth, seed=args.seed)
        settings.configure(OUTPUT_FORMAT=args.output_format, STRICT=args.strict or None)
        result = runner.run(self.name, system_file, **self.options(args))
        if settings.OUTPUT_FORMAT == "structured":
            sys.stdout.write(render_structured(result))
        else:
            sys.stdout.write(render_text(result))
        if settings.STRICT and result.cap_reached:
            return EXIT_CAP_REACHED
        return EXIT_OK


class IndexCommand(CommandBase):
    name = "index"
    help = "Exact accessibility index and singular set (Algorithm 1)."


class SingularCommand(CommandBase):
    name = "singular"
    help = "Singular set as an invariant closure (Algorithm 2)."


class BoundCommand(CommandBase):
    name = "bound"
    help = "Upper bound on the index from the bracket module chain."


class StrongCommand(CommandBase):
    name = "strong"
    help = "Strong accessibility: generic test, index and singular set."


class RankCommand(CommandBase):
    name = "rank"
    help = "Points where the bracket distribution has rank below l."

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--l", type=int, dest="l", help="rank threshold (default n)")

    def options(self, args):
        return {"l": args.l}


class ImmerseCommand(CommandBase):
    name = "immerse"
    help = "Derive the polynomial system of an immersion block."

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--check", action="store_true", help="verify the pushforward identities")

    def options(self, args):
        return {"check": args.check}


class FullCommand(CommandBase):
    name = "full"
    help = "Run every applicable analysis."


COMMANDS = [
    IndexCommand,
    SingularCommand,
    BoundCommand,
    StrongCommand,
    RankCommand,
    ImmerseCommand,
    FullCommand,
]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyaccess")
    sub = parser.add_subparsers(dest="command")
    for cmd in COMMANDS:
        cmd.handler(sub)
    return parser


def configure_logging(verbosity: int) -> None:
    level = getattr(logging, settings.LOG_LEVEL)
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=settings.LOG_FORMAT)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) is None:
        parser.print_help()
        return EXIT_OK
    configure_logging(args.verbose)
    try:
        return args.command.run(args)
    except (PolyaccessError, OSError) as exc:
        print(f"polyaccess: error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    finally:
        settings.reset()


if __name__ == "__main__":
    sys.exit(main())
