# app/main.py
from __future__ import annotations

from dotenv import load_dotenv
load_dotenv()

import argparse
import json
import logging
import sys
from typing import List, Optional, TextIO

from app.core.config import settings
from app.core.errors import AppError
from app.schemas.common import ErrorOut
from app.utils.files import write_output

from app.commands import (
    chaingang as chaingang_commands,
    families as families_commands,
    posets as posets_commands,
    simplicial as simplicial_commands,
    verify as verify_commands,
)

logger = logging.getLogger("app")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopf-setfam",
        description="Antipoden im Hopf-Monoid der Mengenfamilien und seinen Untermonoiden.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v INFO, -vv DEBUG")
    subparsers = parser.add_subparsers(dest="verb", required=True, metavar="<verb>")

    # Befehle je Bereich
    families_commands.register(subparsers)
    posets_commands.register(subparsers)
    simplicial_commands.register(subparsers)
    chaingang_commands.register(subparsers)
    verify_commands.register(subparsers)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = {0: settings.LOG_LEVEL.upper(), 1: "INFO"}.get(verbosity, "DEBUG")
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def _error(exc: AppError, stderr: TextIO) -> None:
    out = ErrorOut(**exc.detail())
    stderr.write(json.dumps(out.model_dump(exclude_none=True), ensure_ascii=False) + "\n")


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Exit-Codes: 0 ok, 2 Parserfehler (auch argparse), 3 fachlicher Fehler."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    _configure_logging(args.verbose)
    logger.info("Befehl %s", args.verb)
    try:
        write_output(args.handler(args), stdout)
    except AppError as exc:
        logger.debug("Abbruch mit %s", exc.code)
        _error(exc, stderr)
        return exc.exit_code
    except Exception:
        logger.exception("Unerwarteter Fehler in %s", args.verb)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
