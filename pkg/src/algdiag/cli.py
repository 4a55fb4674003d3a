"""Command-line front end: ``python -m algdiag <command> ...``.

Exit status is 0 on success, 1 when the input is rejected by the
mathematics (message on standard error) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from contextlib import contextmanager

from .composed_sum import composed_sum_xy
from .diagonal import algebraic_diagonal, diagonal_series, sloped_diagonal
from .parser import parse_poly, parse_ratfun
from .polynomials import BiPoly, UniPoly, format_bipoly, format_unipoly
from .residues import algebraic_residues
from .walks import StepSet, bridges_series, excursions_series, meanders_series

__all__ = ["run_command", "main", "poly_to_json", "series_to_json"]

_VALUE_FLAGS = ("--input", "--qhat", "--steps")


def _q(v) -> str:
    return f"{v.numerator}/{v.denominator}"


def poly_to_json(p: BiPoly, names) -> dict:
    return {"vars": list(names), "terms": [[i, j, _q(v)] for i, j, v in sorted(p.terms())]}


def series_to_json(coeffs, var: str = "t") -> dict:
    return {"var": var, "order": len(coeffs), "coeffs": [_q(v) for v in coeffs]}


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="algdiag", description="Annihilating polynomials for residues, composed sums and diagonals.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--timing", action="store_true", help="print wall-clock time per stage on stderr")
        return p

    p = common(sub.add_parser("residues", help="polynomial canceling the residues of P/Q wrt y"))
    p.add_argument("--input", required=True, help="rational function P/Q in x, y")
    p.add_argument("--qhat", help="divisor of Q selecting the poles (default: Q)")

    p = common(sub.add_parser("composed-sum", help="a^D_x times the composed sum of c roots"))
    p.add_argument("--input", required=True, help="polynomial in x, y (roots in y)")
    p.add_argument("--c", type=int, required=True)

    p = common(sub.add_parser("diagonal", help="polynomial canceling Diag(A/B)"))
    p.add_argument("--input", required=True)

    p = common(sub.add_parser("sloped-diagonal", help="polynomial canceling the (p, q)-diagonal"))
    p.add_argument("--input", required=True)
    p.add_argument("--slope", nargs=2, type=int, metavar=("P", "Q"), required=True)

    p = common(sub.add_parser("diag-series", help="first terms of Diag(A/B) by direct expansion"))
    p.add_argument("--input", required=True)
    p.add_argument("--terms", type=int, required=True)

    p = common(sub.add_parser("walks", help="counting series of bridges, excursions or meanders"))
    p.add_argument("--steps", required=True, help="comma-separated step heights, e.g. -1,0,1")
    p.add_argument("--kind", choices=("bridges", "excursions", "meanders"), required=True)
    p.add_argument("--terms", type=int, required=True)
    return ap


def _glue_values(argv):
    """Let value flags take arguments that start with '-', as in ``--steps -1,1``."""
    out = []
    it = iter(range(len(argv)))
    for i in it:
        a = argv[i]
        if a in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") and not argv[i + 1].startswith("--"):
            out.append(f"{a}={argv[i + 1]}")
            next(it, None)
        else:
            out.append(a)
    return out


class _Timer:
    def __init__(self, enabled: bool, err):
        self.enabled = enabled
        self.err = err

    @contextmanager
    def stage(self, name: str):
        t0 = time.perf_counter()
        yield
        if self.enabled:
            print(f"{name}: {time.perf_counter() - t0:.3f}s", file=self.err)


def _emit_poly(p: BiPoly, names, fmt: str, out):
    if fmt == "json":
        print(json.dumps(poly_to_json(p, names)), file=out)
    else:
        print(format_bipoly(p, names), file=out)


def _parse_steps(text: str) -> StepSet:
    try:
        return StepSet(int(s) for s in text.split(",") if s.strip())
    except ValueError as e:
        raise ValueError(f"bad step list {text!r}: {e}") from None


def _run(args, out, timer: _Timer):
    cmd = args.command
    if cmd == "walks":
        with timer.stage("parse"):
            steps = _parse_steps(args.steps)
        if args.terms < 0:
            raise ValueError("--terms must be nonnegative")
        fn = {"bridges": bridges_series, "excursions": excursions_series, "meanders": meanders_series}[args.kind]
        with timer.stage(args.kind):
            ser = fn(steps, args.terms)
        ints = [int(v) for v in ser.coeffs]
        print(json.dumps(ints) if args.format == "json" else ", ".join(map(str, ints)), file=out)
        return

    with timer.stage("parse"):
        if cmd == "composed-sum":
            p = parse_poly(args.input)
        else:
            a, b = parse_ratfun(args.input)
            qhat = parse_poly(args.qhat) if getattr(args, "qhat", None) else None

    if cmd == "residues":
        with timer.stage("residues"):
            res = algebraic_residues(a, b, qhat)
        _emit_poly(res.poly, ("x", "z"), args.format, out)
    elif cmd == "composed-sum":
        with timer.stage("composed-sum"):
            res = composed_sum_xy(p, args.c)
        _emit_poly(res.poly, ("x", "y"), args.format, out)
    elif cmd == "diagonal":
        with timer.stage("diagonal"):
            res = algebraic_diagonal(a, b)
        _emit_poly(res.phi, ("t", "D"), args.format, out)
    elif cmd == "sloped-diagonal":
        with timer.stage("sloped-diagonal"):
            res = sloped_diagonal(a, b, *args.slope)
        _emit_poly(res.phi, ("s", "D"), args.format, out)
    elif cmd == "diag-series":
        if args.terms < 0:
            raise ValueError("--terms must be nonnegative")
        with timer.stage("diag-series"):
            ser = diagonal_series(a, b, args.terms)
        if args.format == "json":
            print(json.dumps(series_to_json(ser.coeffs)), file=out)
        else:
            print(f"{format_unipoly(UniPoly(ser.coeffs), 't')} + O(t^{args.terms})", file=out)


def run_command(argv=None, out=None, err=None) -> int:
    """Run one command; returns the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = _build_parser()
    try:
        old_err, sys.stderr = sys.stderr, err
        try:
            args = ap.parse_args(_glue_values(argv))
        finally:
            sys.stderr = old_err
    except SystemExit as e:
        return int(e.code or 0)
    timer = _Timer(args.timing, err)
    try:
        _run(args, out, timer)
    except (ValueError, ArithmeticError) as e:
        # ZeroDivisionError is an ArithmeticError
        print(f"error: {e}", file=err)
        return 1
    return 0


def main():
    sys.exit(run_command())
