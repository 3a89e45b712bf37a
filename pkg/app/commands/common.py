# app/commands/common.py
"""Gemeinsame Optionen und Ausgabe der CLI-Befehle."""
from __future__ import annotations

import argparse
from typing import Callable, Optional

from pydantic import BaseModel

from app.core.config import settings
from app.utils.render import dump

Handler = Callable[[argparse.Namespace], str]


# ------------------------------------------------------------
# Optionen
# ------------------------------------------------------------
def add_input(parser: argparse.ArgumentParser, name: str = "--input", required: bool = True, help: str = "Pfad oder '-' (stdin)") -> None:
    parser.add_argument(name, required=required, help=help)


def add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "text"), default="json")


def add_limits(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--threads", type=int, default=None, help=f"Worker (Default {settings.THREADS})")
    parser.add_argument("--max-ground", type=int, default=None, help=f"Größenlimit (Default {settings.MAX_GROUND})")


def add_oracle(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--oracle", action="store_true", help="zusätzlich mit Takeuchi vergleichen (Bericht statt Summe)")


def add_truncation(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--truncation", type=int, default=None, help=f"Abschneidegrad N (Default {settings.TRUNCATION})")


def command(subparsers, name: str, handler: Handler, help: str) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(name, help=help, description=help)
    parser.set_defaults(handler=handler)
    return parser


# ------------------------------------------------------------
# Eingabe / Ausgabe
# ------------------------------------------------------------
def emit(args: argparse.Namespace, model: BaseModel, text: Optional[str] = None) -> str:
    """JSON ist das Maschinenformat; Text nur zur Anzeige."""
    if getattr(args, "format", "json") == "text" and text is not None:
        return text
    return dump(model)
