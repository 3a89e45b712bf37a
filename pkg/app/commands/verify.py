# app/commands/verify.py
from __future__ import annotations

import argparse

from app.commands.common import add_input, add_limits, command, emit
from app.core.errors import ParseError
from app.services.verify_service import (
    TARGETS,
    make_rng,
    report,
    run_random,
    verify_cg_chain,
    verify_dual,
    verify_exorcism,
    verify_loi,
    verify_ordsum,
    verify_simp,
    verify_skeleton,
)
from app.utils.files import read_input
from app.utils.formats import parse_complex, parse_family, parse_poset


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise ParseError(f"verify {args.target} benötigt {', '.join(missing)}", source="<argv>")


def verify_cmd(args: argparse.Namespace) -> str:
    if args.random:
        rng = make_rng(args.seed)
        result = run_random(args.target, args.count, args.size, rng, args.max_ground, args.threads)
        return emit(args, result)

    target = args.target
    if target == "antipode-skeleton":
        _require(args, "m", "n")
        case = verify_skeleton(args.m, args.n, args.max_ground, args.threads)
    elif target == "cg-antipode":
        _require(args, "n")
        case = verify_cg_chain(args.n)
    elif target == "antipode-ordsum":
        _require(args, "lo", "hi")
        case = verify_ordsum(parse_poset(*read_input(args.lo)), parse_poset(*read_input(args.hi)), args.max_ground)
    else:
        _require(args, "input")
        text, source = read_input(args.input)
        if target == "antipode-loi":
            case = verify_loi(parse_poset(text, source), args.max_ground, args.threads)
        elif target == "antipode-dual":
            case = verify_dual(parse_poset(text, source), args.max_ground)
        elif target == "antipode-simp":
            case = verify_simp(parse_complex(text, source), args.max_ground, args.threads)
        else:
            case = verify_exorcism(parse_family(text, source), max_ground=args.max_ground)
    return emit(args, report(target, [case]))


def register(subparsers) -> None:
    parser = command(subparsers, "verify", verify_cmd, "Geschlossene Formel gegen Takeuchi-Orakel prüfen")
    parser.add_argument("target", choices=TARGETS)
    add_input(parser, required=False)
    add_input(parser, "--lo", required=False)
    add_input(parser, "--hi", required=False)
    parser.add_argument("--m", type=int, default=None)
    parser.add_argument("--n", type=int, default=None)
    parser.add_argument("--random", action="store_true", help="zufällige Instanzen (Seed: HOPF_SETFAM_SEED)")
    parser.add_argument("--size", type=int, default=5, help="Größe der Zufallsinstanzen")
    parser.add_argument("--count", type=int, default=20, help="Anzahl der Zufallsinstanzen")
    parser.add_argument("--seed", type=int, default=None, help="überschreibt HOPF_SETFAM_SEED")
    add_limits(parser)
