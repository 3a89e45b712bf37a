# app/commands/chaingang.py
from __future__ import annotations

import argparse

from app.commands.common import add_format, add_input, add_truncation, command, emit
from app.core.errors import TruncationMismatch
from app.models.character import Character
from app.services.character_service import (
    char_convolve,
    char_inverse,
    exorcism_to_series,
    series_to_char,
)
from app.services.chaingang_service import cg_antipode, cg_coproduct, quotient_to_sym
from app.utils.files import read_input
from app.utils.formats import parse_cg_sum, parse_character, parse_power_series
from app.utils.render import (
    cg_sum_out,
    cg_tensor_out,
    character_out,
    character_text,
    series_out,
    series_text,
)


def _expr(args: argparse.Namespace):
    if args.expr is not None:
        return parse_cg_sum(args.expr, "<expr>")
    text, source = read_input(args.input)
    return parse_cg_sum(text, source)


def _character(path: str, truncation) -> Character:
    text, source = read_input(path)
    zeta = parse_character(text, source)
    if truncation is not None and zeta.truncation != truncation:
        raise TruncationMismatch(f"Charakter hat N = {zeta.truncation}, verlangt N = {truncation}.")
    return zeta


# ------------------------------------------------------------
# Algebra
# ------------------------------------------------------------
def cg_antipode_cmd(args: argparse.Namespace) -> str:
    result = cg_antipode(_expr(args))
    if args.quotient:
        result = quotient_to_sym(result)
    return emit(args, cg_sum_out(result), result.render())


def cg_coproduct_cmd(args: argparse.Namespace) -> str:
    result = cg_coproduct(_expr(args))
    return emit(args, cg_tensor_out(result), result.render())


def cg_quotient_cmd(args: argparse.Namespace) -> str:
    result = quotient_to_sym(_expr(args))
    return emit(args, cg_sum_out(result), result.render())


# ------------------------------------------------------------
# Charaktere
# ------------------------------------------------------------
def cg_convolve_cmd(args: argparse.Namespace) -> str:
    result = char_convolve(_character(args.left, args.truncation), _character(args.right, args.truncation))
    return emit(args, character_out(result), character_text(result))


def cg_invert_cmd(args: argparse.Namespace) -> str:
    result = char_inverse(_character(args.input, args.truncation))
    return emit(args, character_out(result), character_text(result))


def cg_series_cmd(args: argparse.Namespace) -> str:
    if args.from_series:
        text, source = read_input(args.input)
        zeta = series_to_char(parse_power_series(text, source))
        return emit(args, character_out(zeta), character_text(zeta))
    series = exorcism_to_series(_character(args.input, args.truncation))
    return emit(args, series_out(series), series_text(series))


# ------------------------------------------------------------
# Registrierung
# ------------------------------------------------------------
def _expr_parser(subparsers, name: str, handler, help: str):
    parser = command(subparsers, name, handler, help)
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--expr", help="z. B. 'C[2] + 3*C[1]F^2'")
    group.add_argument("--input", help="Pfad oder '-' (Text oder CGSum-JSON)")
    add_format(parser)
    return parser


def register(subparsers) -> None:
    parser = _expr_parser(subparsers, "cg-antipode", cg_antipode_cmd, "Antipode in der Kettenbanden-Algebra")
    parser.add_argument("--quotient", action="store_true", help="Bild im Quotienten Λ")
    _expr_parser(subparsers, "cg-coproduct", cg_coproduct_cmd, "Koprodukt Δ in der Kettenbanden-Algebra")
    _expr_parser(subparsers, "cg-quotient", cg_quotient_cmd, "Projektion auf Λ (Terme mit p > 0 entfallen)")

    parser = command(subparsers, "cg-convolve", cg_convolve_cmd, "Faltung zweier Charaktere")
    add_input(parser, "--left")
    add_input(parser, "--right")
    add_truncation(parser)
    add_format(parser)

    parser = command(subparsers, "cg-invert", cg_invert_cmd, "Inverser Charakter ζ∘S")
    add_input(parser)
    add_truncation(parser)
    add_format(parser)

    parser = command(subparsers, "cg-series", cg_series_cmd, "Exorzismus-Charakter ↔ Potenzreihe")
    add_input(parser)
    parser.add_argument("--from-series", action="store_true", help="Eingabe ist eine Koeffizientenliste")
    add_truncation(parser)
    add_format(parser)
