# app/utils/files.py
import sys
from pathlib import Path
from typing import TextIO, Tuple

from app.core.errors import ParseError


def read_input(path: str, stdin: TextIO | None = None) -> Tuple[str, str]:
    """Liest Pfad oder '-' (stdin). Gibt (Text, Quellname) zurück."""
    if path == "-":
        return (stdin or sys.stdin).read(), "<stdin>"
    p = Path(path)
    if not p.is_file():
        raise ParseError(f"Eingabedatei nicht gefunden: {path}", source=path)
    try:
        return p.read_text(encoding="utf-8"), path
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"Eingabedatei nicht lesbar: {exc}", source=path) from exc


def write_output(text: str, stream: TextIO | None = None) -> None:
    out = stream or sys.stdout
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")
