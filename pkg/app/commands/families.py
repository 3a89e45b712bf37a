# app/commands/families.py
from __future__ import annotations

import argparse
import logging

from app.commands.common import add_format, add_input, add_limits, add_oracle, command, emit
from app.schemas.family import ClassifyOut, CoproductOut
from app.services.classification_service import classify_family, is_greedoid, sorted_flags
from app.services.family_service import coproduct, contract, join, restrict
from app.services.takeuchi_service import recursive_antipode, takeuchi_antipode
from app.services.verify_service import compare_sums, report
from app.utils.files import read_input
from app.utils.formats import parse_family, parse_subset
from app.utils.render import family_out, family_text, formal_sum_out, formal_sum_text, labels

logger = logging.getLogger(__name__)


def _family(args: argparse.Namespace, attr: str = "input"):
    text, source = read_input(getattr(args, attr))
    return parse_family(text, source, implicit_empty=args.implicit_empty)


# ------------------------------------------------------------
# Handler
# ------------------------------------------------------------
def antipode_cmd(args: argparse.Namespace) -> str:
    family = _family(args)
    if args.engine == "recursive":
        result = recursive_antipode(family, max_ground=args.max_ground)
    else:
        result = takeuchi_antipode(family, threads=args.threads, max_ground=args.max_ground)
    if args.oracle:
        # Kontrolle über den jeweils anderen Weg
        other = (
            takeuchi_antipode(family, threads=args.threads, max_ground=args.max_ground)
            if args.engine == "recursive"
            else recursive_antipode(family, max_ground=args.max_ground)
        )
        return emit(args, report("antipode", [compare_sums(str(family), other, result)]))
    return emit(args, formal_sum_out(result), formal_sum_text(result))


def product_cmd(args: argparse.Namespace) -> str:
    result = join(_family(args), _family(args, "other"))
    return emit(args, family_out(result), family_text(result))


def _subset(args: argparse.Namespace):
    family = _family(args)
    return family, parse_subset(args.subset, family.ground)


def restrict_cmd(args: argparse.Namespace) -> str:
    family, subset = _subset(args)
    result = restrict(family, subset)
    return emit(args, family_out(result), family_text(result))


def contract_cmd(args: argparse.Namespace) -> str:
    family, subset = _subset(args)
    result = contract(family, subset)
    return emit(args, family_out(result), family_text(result))


def coproduct_cmd(args: argparse.Namespace) -> str:
    family, subset = _subset(args)
    left, right = coproduct(family, subset)
    out = CoproductOut(
        subset=labels(family.ground, subset),
        restriction=family_out(left),
        contraction=family_out(right),
    )
    return emit(args, out, f"{family_text(left)} ⊗ {family_text(right)}")


def classify_cmd(args: argparse.Namespace) -> str:
    family = _family(args)
    flags = sorted_flags(classify_family(family))
    out = ClassifyOut(flags=flags, greedoid=is_greedoid(family))
    return emit(args, out, ", ".join(flags) or "-")


# ------------------------------------------------------------
# Registrierung
# ------------------------------------------------------------
def _family_parser(subparsers, name: str, handler, help: str, subset: bool = False):
    parser = command(subparsers, name, handler, help)
    add_input(parser)
    parser.add_argument("--implicit-empty", action="store_true", help="fehlendes ∅ ergänzen")
    add_format(parser)
    if subset:
        parser.add_argument("--subset", required=True, help="Teilmenge S, z. B. '1,2' oder '12'")
    return parser


def register(subparsers) -> None:
    parser = _family_parser(subparsers, "antipode", antipode_cmd, "Antipode einer Mengenfamilie (Takeuchi)")
    parser.add_argument("--engine", choices=("takeuchi", "recursive"), default="takeuchi")
    add_limits(parser)
    add_oracle(parser)

    parser = _family_parser(subparsers, "product", product_cmd, "Join zweier Familien")
    add_input(parser, "--other")

    _family_parser(subparsers, "restrict", restrict_cmd, "Restriktion F|_S", subset=True)
    _family_parser(subparsers, "contract", contract_cmd, "Kontraktion F/_S", subset=True)
    _family_parser(subparsers, "coproduct", coproduct_cmd, "Koprodukt Δ_{S,T}(F)", subset=True)
    _family_parser(subparsers, "classify", classify_cmd, "Klassenzugehörigkeit der Familie")
