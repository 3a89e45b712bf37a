# app/commands/posets.py
from __future__ import annotations

import argparse

from app.commands.common import add_format, add_input, add_limits, add_oracle, command, emit
from app.core.errors import ensure_ground_size
from app.schemas.poset import BetrayalSupportOut, FracturingListOut, SupportOut
from app.services.fracturing_service import (
    betrayal_functions,
    enumerate_fracturings,
    is_acyclic,
    is_good,
    supp_beta,
    support_system,
)
from app.services.loi_antipode_service import antipode_loi, antipode_of_dual, antipode_ordinal_sum
from app.services.verify_service import report, verify_dual, verify_loi, verify_ordsum
from app.utils.files import read_input
from app.utils.formats import parse_betrayal, parse_fracturing, parse_poset
from app.utils.render import formal_sum_out, formal_sum_text, fracturing_out, poset_out


def _poset(path: str):
    text, source = read_input(path)
    return parse_poset(text, source)


# ------------------------------------------------------------
# Antipoden
# ------------------------------------------------------------
def antipode_loi_cmd(args: argparse.Namespace) -> str:
    poset = _poset(args.input)
    if args.oracle:
        case = verify_dual(poset, args.max_ground) if args.dual else verify_loi(poset, args.max_ground, args.threads)
        return emit(args, report("antipode-loi", [case]))
    result = antipode_of_dual(poset, args.max_ground) if args.dual else antipode_loi(poset, args.max_ground)
    return emit(args, formal_sum_out(result), formal_sum_text(result))


def antipode_ordsum_cmd(args: argparse.Namespace) -> str:
    lo, hi = _poset(args.lo), _poset(args.hi)
    if args.oracle:
        return emit(args, report("antipode-ordsum", [verify_ordsum(lo, hi, args.max_ground)]))
    result = antipode_ordinal_sum(lo, hi, max_ground=args.max_ground)
    return emit(args, formal_sum_out(result), formal_sum_text(result))


# ------------------------------------------------------------
# Fracturings / Supportsysteme
# ------------------------------------------------------------
def fracturings_cmd(args: argparse.Namespace) -> str:
    poset = _poset(args.input)
    ensure_ground_size(len(poset), args.max_ground)
    items = []
    for q in enumerate_fracturings(poset):
        acyclic = is_acyclic(q)
        good = is_good(poset, q)
        if args.only == "good" and not good or args.only == "acyclic" and not acyclic:
            continue
        items.append(fracturing_out(q, acyclic, good))
    out = FracturingListOut(poset=poset_out(poset), items=items, total=len(items))
    lines = [
        f"{'+' if f.sign > 0 else '-'} {'|'.join(','.join(str(x) for x in b) for b in f.blocks) or '∅'}"
        f"{'  good' if f.good else ('  acyclic' if f.acyclic else '')}"
        for f in items
    ]
    return emit(args, out, "\n".join(lines))


def support_cmd(args: argparse.Namespace) -> str:
    poset = _poset(args.input)
    ensure_ground_size(len(poset), args.max_ground)
    q = parse_fracturing(args.fracturing, poset)
    ground = poset.ground
    compositions = [phi.render(ground) for phi in support_system(poset, q)]
    if args.beta:
        betas = [parse_betrayal(args.beta, poset)]
    elif args.by_betrayal:
        betas = list(betrayal_functions(poset, q))
    else:
        betas = []
    by_beta = [
        BetrayalSupportOut(
            beta=[(ground.labels[b], ground.labels[a]) for b, a in beta],
            compositions=[phi.render(ground) for phi in supp_beta(poset, q, beta)],
        )
        for beta in betas
    ]
    out = SupportOut(fracturing=q.render(), compositions=compositions, total=len(compositions), by_betrayal=by_beta)
    return emit(args, out, "\n".join(compositions))


# ------------------------------------------------------------
# Registrierung
# ------------------------------------------------------------
def register(subparsers) -> None:
    parser = command(subparsers, "antipode-loi", antipode_loi_cmd, "Antipode von J(P) über gute Fracturings")
    add_input(parser)
    parser.add_argument("--dual", action="store_true", help="S(J(P*)) über die Dualitätsformel")
    add_format(parser)
    add_limits(parser)
    add_oracle(parser)

    parser = command(subparsers, "antipode-ordsum", antipode_ordsum_cmd, "Antipode von J(P_lo ⊕ P_hi)")
    add_input(parser, "--lo")
    add_input(parser, "--hi")
    add_format(parser)
    add_limits(parser)
    add_oracle(parser)

    parser = command(subparsers, "fracturings", fracturings_cmd, "Fracturings eines Posets")
    add_input(parser)
    parser.add_argument("--only", choices=("all", "good", "acyclic"), default="all")
    add_format(parser)
    add_limits(parser)

    parser = command(subparsers, "support", support_cmd, "Supportsystem Supp(Q)")
    add_input(parser)
    parser.add_argument("--fracturing", required=True, help="z. B. 'blocks=1|2'")
    parser.add_argument("--beta", default=None, help="Verratsfunktion, z. B. '3=1'")
    parser.add_argument("--by-betrayal", action="store_true", help="Supp_β für alle Verratsfunktionen")
    add_format(parser)
    add_limits(parser)
