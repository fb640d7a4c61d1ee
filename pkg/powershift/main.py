import argparse
import sys

from powershift import __version__
from powershift.commands import models, policies, simulate, validate
from powershift.exceptions import PowerShiftError
from powershift.logging import get_logger

logger = get_logger("cli")

COMMANDS = (simulate, validate, policies, models)


class PowerShiftArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with status 1, the same as configuration errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = PowerShiftArgumentParser(
        prog="powershift",
        description="Simulate how factor income shifts from humans to AGI across production-function families",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def cli_main(argv: list[str] | None = None) -> int:
    """Run one command and return its exit code: 0 ok, 1 config or usage error, 2 validation failure."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1

    try:
        return args.handler(args)
    except PowerShiftError as exc:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"error: {exc.detail}", file=sys.stderr)
        return exc.exit_code


def run() -> None:
    sys.exit(cli_main())
