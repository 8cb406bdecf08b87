"""Command-line front end: mwsextic <command> [args] [--format text|json]."""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .basisgen import BranchSearchExhausted, IrrationalRadical, rational_basis, verify_basis
from .ellcurve import Curve
from .exactnum import FactorLimit, FactorLimitExceeded, ZeroInput, set_default_limit
from .qbar import verify_galois_decomposition, verify_orbit
from .ranker import NotCoprime, SingularSubstitution, classify_sextic_twist, decide_rank, reduce_linear_form
from .rootnum import DivisibleBySix, ZeroFibre, constant_root_number

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 2, 3

INPUT_ERRORS = (ZeroInput, NotCoprime, SingularSubstitution, DivisibleBySix, ZeroFibre,
                FactorLimitExceeded, IrrationalRadical)


class VerificationFailed(RuntimeError):
    pass


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A,B but got {text!r}")
    return a, b


def dumps(obj) -> str:
    """Canonical JSON; loads followed by dumps reproduces the same bytes."""
    return json.dumps(obj, sort_keys=True, indent=2)


# --- commands -------------------------------------------------------------------

def cmd_rank(args):
    cert = decide_rank(args.A, args.B)
    text = f"rank {cert.rank}\npath {cert.path}\nsubcases {cert.subcases[0]}, {cert.subcases[1]}"
    return cert.to_json(), text


def cmd_basis(args):
    rep = rational_basis(args.A, args.B)
    if not rep.verified:
        raise VerificationFailed(f"basis at ({args.A}, {args.B}) failed verification")
    lines = [f"rank {rep.rank}", f"case {rep.case_label}"]
    lines += [f"  {p}" for p in rep.basis]
    lines += [f"gram {rep.gram}", f"type {rep.lattice_type}"]
    return rep.to_json(), "\n".join(lines)


def cmd_verify_orbits(args):
    A, B = (args.A, args.B) if args.A is not None else args.generic_pair
    if B is None or A == 0 or B == 0:
        raise ZeroInput("A and B must be non-zero")
    orbits = args.orbits or list(range(1, 9))
    reports = [verify_orbit(i, A, B) for i in orbits]
    out = {"A": A, "B": B, "orbits": [r.to_json() for r in reports]}
    lines = [f"orbit {r.orbit}: size {r.size}, type {r.lattice_type}, "
             f"relations {r.relations_checked}, {'ok' if r.ok else 'FAILED'}" for r in reports]
    failed = [r.orbit for r in reports if not r.ok]
    if args.galois:
        g = verify_galois_decomposition(A, B)
        out["galois"] = {"det": g.det, "kronecker": g.kronecker_ok, "ok": g.ok}
        lines.append(f"galois: det {g.det}, kronecker {g.kronecker_ok}, {'ok' if g.ok else 'FAILED'}")
        if not g.ok:
            failed.append("galois")
    if failed:
        raise VerificationFailed("\n".join(lines))
    return out, "\n".join(lines)


def cmd_root_number(args):
    v = constant_root_number(args.A, args.B)
    text = v.kind if v.matched_row is None else f"{v.kind} ({v.matched_row})"
    if v.sigma is not None:
        text += f"\nsigma {v.sigma}, sign {v.sign_rule}"
    return v.to_json(), text


def cmd_twist(args):
    cert, rule = classify_sextic_twist(args.a, args.b, args.c)
    out = cert.to_json()
    out["rule"] = rule
    return out, f"A = {cert.A}, B = {cert.B}\nrank {cert.rank}\nrule {rule or 'none'}"


def cmd_reduce(args):
    red = reduce_linear_form(args.A, (args.a, args.b), args.B, (args.c, args.d))
    rep = rational_basis(args.A, args.B)
    pulled = [red.pull_back(p) for p in rep.basis]
    curve = Curve(red.sextic())
    if not all(curve.on_curve(p) for p in pulled):
        raise VerificationFailed("pulled-back point is off the curve")
    out = {"substitution": red.substitution(), "rank": rep.rank,
           "basis": [str(p) for p in pulled]}
    lines = [red.substitution(), f"rank {rep.rank}"] + [f"  {p}" for p in pulled]
    return out, "\n".join(lines)


def _cell(job):
    A, B, with_basis = job
    cert = decide_rank(A, B)
    row = {"A": A, "B": B, "rank": cert.rank, "path": cert.path}
    if with_basis:
        rep = rational_basis(A, B)
        row["verified"] = rep.verified and len(rep.basis) == cert.rank and verify_basis(rep)
    return row


def cmd_sweep(args):
    lo, hi = args.range
    jobs = [(A, B, args.basis) for A in range(lo, hi + 1) for B in range(lo, hi + 1)
            if A and B]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            rows = list(ex.map(_cell, jobs, chunksize=16))
    else:
        rows = [_cell(j) for j in jobs]
    if args.min_rank:
        rows = [r for r in rows if r["rank"] >= args.min_rank]
    if args.basis and not all(r["verified"] for r in rows):
        bad = [(r["A"], r["B"]) for r in rows if not r["verified"]]
        raise VerificationFailed(f"basis verification failed at {bad[:10]}")
    lines = [f"{r['A']} {r['B']} rank {r['rank']} {r['path']}" for r in rows]
    return {"cells": rows}, "\n".join(lines)


# --- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--factor-limit", type=int, default=None, metavar="N",
                        help="trial division bound for factorization")
    common.add_argument("--generic-pair", type=_pair, default=(5, 7), metavar="A,B",
                        help="pair used by verify-orbits when A B are omitted")

    p = argparse.ArgumentParser(prog="mwsextic",
                                description="Mordell-Weil ranks and bases of y^2 = x^3 + A t^6 + B")
    sub = p.add_subparsers(dest="command", required=True)

    def ab(name, fn, help_):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("A", type=int)
        s.add_argument("B", type=int)
        s.set_defaults(fn=fn)
        return s

    ab("rank", cmd_rank, "generic rank and decision path")
    ab("basis", cmd_basis, "verified basis of E(Q(t))")
    ab("root-number", cmd_root_number, "constant root number verdict")

    s = sub.add_parser("verify-orbits", parents=[common], help="check the 240 sections over the tower")
    s.add_argument("A", type=int, nargs="?")
    s.add_argument("B", type=int, nargs="?")
    s.add_argument("--orbits", type=int, nargs="+", choices=range(1, 9))
    s.add_argument("--galois", action="store_true", help="also check the Galois module Gram matrix")
    s.set_defaults(fn=cmd_verify_orbits)

    s = sub.add_parser("twist", parents=[common], help="y^2 = x^3 + 3ca^2 t^6 + cb^2")
    for name in ("a", "b", "c"):
        s.add_argument(name, type=int)
    s.set_defaults(fn=cmd_twist)

    s = sub.add_parser("reduce", parents=[common], help="y^2 = x^3 + A(at+b)^6 + B(ct+d)^6")
    for name in ("A", "a", "b", "B", "c", "d"):
        s.add_argument(name, type=int)
    s.set_defaults(fn=cmd_reduce)

    s = sub.add_parser("sweep", parents=[common], help="ranks over a square grid of (A, B)")
    s.add_argument("range", type=int, nargs=2, metavar=("LO", "HI"))
    s.add_argument("--basis", action="store_true", help="also build and verify bases")
    s.add_argument("--min-rank", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(fn=cmd_sweep)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    if args.factor_limit is not None:
        set_default_limit(FactorLimit(trial_bound=args.factor_limit))
    try:
        payload, text = args.fn(args)
    except INPUT_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (VerificationFailed, BranchSearchExhausted) as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFY
    print(dumps(payload) if args.format == "json" else text, file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
