"""
TSSNet command-line entry point.

Gebruik:
    python -m cli.main <commando> [--config FILE] [--set key=value ...]

Exit codes: 0 bij succes, 1 bij een gebruiksfout, 2 bij een runtime fout.
"""

import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from cli.commands import COMMANDS
from cli.config import ConfigFileError, RunConfig, load_run_config
from config.settings import setup_logging
from src.tssnet import __version__
from src.tssnet.utils.errors import TSSNetError

logger = logging.getLogger(__name__)

PROG = "tssnet"
SYNOPSIS = f"{PROG} {{{','.join(COMMANDS)}}} [--config FILE] [--set key=value ...] [--out-dir DIR] [--jobs N]"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2


class UsageParser(argparse.ArgumentParser):
    """ArgumentParser die bij een fout de synopsis toont en met code 1 stopt."""

    def __init__(self, *args, synopsis: str = SYNOPSIS, **kwargs):
        super().__init__(*args, **kwargs)
        self.synopsis = synopsis

    def error(self, message: str):
        sys.stderr.write(f"{self.prog}: fout: {message}\n")
        sys.stderr.write(f"gebruik: {self.synopsis}\n")
        self.exit(EXIT_USAGE)


def _common_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="FILE", help="Configbestand met 'key = value' regels")
    common.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                        help="Overschrijf een config key (herhaalbaar)")
    common.add_argument("--out-dir", metavar="DIR", help="Uitvoermap (key out_dir)")
    common.add_argument("--jobs", type=int, metavar="N", help="Aantal processen voor search en sweep")
    common.add_argument("--log-level", metavar="LEVEL", help="DEBUG, INFO, WARNING of ERROR")
    return common


def build_parser() -> UsageParser:
    """Parser met één subparser per commando."""
    parser = UsageParser(prog=PROG, description="TSSNet voorspel-toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="commando", parser_class=UsageParser, required=True)

    common = _common_arguments()
    parser.command_parsers = {}
    for name, module in COMMANDS.items():
        sub = subparsers.add_parser(name, help=module.HELP, parents=[common], synopsis=module.SYNOPSIS)
        module.add_arguments(sub)
        parser.command_parsers[name] = sub
    return parser


def _is_usage_error(error: Exception) -> bool:
    """Onbekende keys en een --set zonder '=' zijn gebruiksfouten, geen runtime fouten."""
    if isinstance(error, ConfigFileError):
        return error.source == "--set"
    if isinstance(error, ValidationError):
        return any(item["type"] == "extra_forbidden" for item in error.errors())
    return False


def _usage_exit(command_parser: UsageParser, message: str) -> int:
    try:
        command_parser.error(message)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    return EXIT_USAGE


def configure_logging(config: RunConfig) -> None:
    level = "DEBUG" if config.debug else config.log_level
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(level)
    setup_logging(level=level)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Voer één commando uit.

    Args:
        argv: Argumenten zonder programmanaam; standaard sys.argv[1:]

    Returns:
        Exit code (0, 1 of 2)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # --help en --version stoppen met 0, gebruiksfouten met 1
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        config = load_run_config(
            args.config,
            args.set,
            out_dir=args.out_dir,
            jobs=args.jobs,
            log_level=args.log_level,
        )
    except (ValidationError, ConfigFileError, OSError) as e:
        if _is_usage_error(e):
            return _usage_exit(parser.command_parsers[args.command], str(e))
        # Ongeldige waarden, een kapot configbestand of een ontbrekend bestand
        sys.stderr.write(f"{PROG}: ongeldige configuratie: {e}\n")
        return EXIT_RUNTIME

    configure_logging(config)
    logger.debug("Commando '%s' met out_dir=%s", args.command, config.out_dir)
    try:
        return COMMANDS[args.command].handle(config, args)
    except (TSSNetError, OSError, ValidationError) as e:
        logger.error("%s mislukt: %s", args.command, e)
        return EXIT_RUNTIME


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
