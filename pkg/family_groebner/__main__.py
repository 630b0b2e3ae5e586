"""Command line interface for family_groebner."""

from __future__ import annotations

import argparse
from collections.abc import Sequence
import logging
from pathlib import Path
import sys

import voluptuous as vol

from .commands import execute_command
from .const import (
    COMMANDS,
    CONF_COMMAND,
    CONF_ELEMENT,
    CONF_FILE,
    CONF_FORMAT,
    CONF_IDEAL,
    CONF_MODULUS,
    CONF_POINT,
    CONF_PRIME,
    CONF_Q,
    CONF_VERBOSE,
    CONF_WINDOW,
    DEFAULT_FORMAT,
    DEFAULT_IDEAL,
    DOMAIN,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_PRECONDITION,
    EXIT_USAGE,
    FORMATS,
    VERSION,
)
from .exceptions import FamilyGroebnerError, SessionParseError
from .render import render
from .session import parse_session

_LOGGER = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """Return argument parser for `family-groebner <command> <file>`."""
    parser = argparse.ArgumentParser(
        prog=DOMAIN.replace("_", "-"),
        description="Groebner bases of families over k[a]/J0 and monomial ideals over Z.",
    )
    parser.add_argument("--version", action="version", version=VERSION)
    parser.add_argument(CONF_COMMAND, choices=COMMANDS)
    parser.add_argument(CONF_FILE, type=Path, help="session file")
    parser.add_argument(f"--{CONF_IDEAL}", default=DEFAULT_IDEAL)
    parser.add_argument(f"--{CONF_POINT}", help="point name or a=v, b=w")
    parser.add_argument(f"--{CONF_PRIME}", help="prime name or (generators)")
    parser.add_argument(f"--{CONF_WINDOW}", help="RxC or N")
    parser.add_argument(f"--{CONF_FORMAT}", choices=FORMATS, default=DEFAULT_FORMAT)
    parser.add_argument(f"--{CONF_ELEMENT}", help="parameter polynomial")
    parser.add_argument(f"--{CONF_MODULUS}", type=int)
    parser.add_argument(f"--{CONF_Q}", type=int)
    parser.add_argument("-v", f"--{CONF_VERBOSE}", action="store_true")
    return parser


def _setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command on a session file and print the report."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as err:
        return EXIT_OK if err.code in (0, None) else EXIT_USAGE
    _setup_logging(args.verbose)
    options = {
        key: value
        for key, value in vars(args).items()
        if key not in (CONF_FILE, CONF_VERBOSE)
    }
    try:
        text = args.file.read_text(encoding="utf-8")
    except OSError as err:
        _LOGGER.error("Cannot read %s: %s", args.file, err)
        return EXIT_USAGE
    try:
        session = parse_session(text)
        report = execute_command(session, options)
    except vol.Invalid as err:
        _LOGGER.error("Invalid arguments: %s", err)
        return EXIT_USAGE
    except SessionParseError as err:
        _LOGGER.error("%s: %s", args.file, err)
        return EXIT_PARSE_ERROR
    except FamilyGroebnerError as err:
        _LOGGER.error("%s", err)
        return EXIT_PRECONDITION
    print(render(report, options[CONF_FORMAT]))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
