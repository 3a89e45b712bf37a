# app/commands/simplicial.py
from __future__ import annotations

import argparse

from app.commands.common import add_format, add_input, add_limits, add_oracle, command, emit
from app.core.errors import ensure_ground_size
from app.schemas.complex import GroupedAntipodeOut, GroupedTermOut
from app.services.simplicial_service import antipode_simp, antipode_simp_grouped, antipode_skeleton
from app.services.verify_service import report, verify_simp, verify_skeleton
from app.utils.files import read_input
from app.utils.formats import parse_complex
from app.utils.render import complex_out, formal_sum_out, formal_sum_text


def antipode_simp_cmd(args: argparse.Namespace) -> str:
    text, source = read_input(args.input)
    x = parse_complex(text, source)
    if args.oracle:
        return emit(args, report("antipode-simp", [verify_simp(x, args.max_ground, args.threads)]))
    if args.grouped:
        ensure_ground_size(len(x.ground), args.max_ground)
        rows = antipode_simp_grouped(x)
        out = GroupedAntipodeOut(
            source=complex_out(x),
            terms=[
                GroupedTermOut(inflator=phi.render(x.ground), coeff=c, complex=complex_out(y))
                for phi, c, y in rows
            ],
        )
        lines = [f"{c:+d} · {y}   [{phi.render(x.ground)}]" for phi, c, y in rows if c]
        return emit(args, out, "\n".join(lines))
    result = antipode_simp(x, threads=args.threads, max_ground=args.max_ground)
    return emit(args, formal_sum_out(result), formal_sum_text(result))


def antipode_skeleton_cmd(args: argparse.Namespace) -> str:
    if args.oracle:
        return emit(args, report("antipode-skeleton", [verify_skeleton(args.m, args.n, args.max_ground, args.threads)]))
    result = antipode_skeleton(args.m, args.n, args.max_ground)
    return emit(args, formal_sum_out(result), formal_sum_text(result))


def register(subparsers) -> None:
    parser = command(subparsers, "antipode-simp", antipode_simp_cmd, "Antipode eines Simplizialkomplexes")
    add_input(parser)
    parser.add_argument("--grouped", action="store_true", help="nach fundamentalen Inflatoren gruppiert")
    add_format(parser)
    add_limits(parser)
    add_oracle(parser)

    parser = command(subparsers, "antipode-skeleton", antipode_skeleton_cmd, "Geschlossene Form für sk(m, n)")
    parser.add_argument("--m", type=int, required=True)
    parser.add_argument("--n", type=int, required=True)
    add_format(parser)
    add_limits(parser)
    add_oracle(parser)
