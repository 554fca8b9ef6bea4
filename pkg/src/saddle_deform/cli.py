"""Command line front end.

    saddle-deform analyze FILE [--deg D] [--tdeg J] [--json | --pretty]
    saddle-deform integrate FILE --c RE+IMi --x0 RE+IMi --samples N
    saddle-deform center FILE
    saddle-deform corpus [ex0|ex1|ex2|ex3|all]

Exit status: 0 when the analysis ran (whatever its verdict), 1 for bad
input, 2 when an internal invariant was violated.
"""
from __future__ import annotations

import argparse
import cmath
import json
import re
import sys

from .analysis import analyze_text, parse_input_file
from .corpus import corpus_check
from .cycle import CyclePath, cycle_integral_numeric, cycle_integral_symbolic
from .errors import SaddleDeformError
from .parser import parse_form


def parse_complex(text: str) -> complex:
    """Numbers like ``0.2``, ``-1.5i``, ``0.7+0.2i`` or ``0.3-i``."""
    s = text.replace(" ", "").replace("*", "").replace("i", "j")
    s = re.sub(r"(^|[+-])j", r"\g<1>1j", s)
    try:
        return complex(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def _load(path, mode=None, deg=None, tdeg=None):
    with open(path, encoding="utf-8") as fh:
        spec = parse_input_file(fh.read())
    if mode is not None:
        spec.mode = mode
    if deg is not None:
        spec.D = deg
    if tdeg is not None:
        spec.J = tdeg
    return spec


def _emit(report, args):
    if getattr(args, "pretty", False):
        print(report.dumps(pretty=True))
    elif getattr(args, "json", False):
        print(report.dumps())
    else:
        print(report.summary())


def cmd_analyze(args):
    spec = _load(args.file, deg=args.deg, tdeg=args.tdeg)
    _emit(analyze_text(spec.omega, spec.config()), args)


def cmd_center(args):
    spec = _load(args.file, mode="center", deg=args.deg, tdeg=args.tdeg)
    _emit(analyze_text(spec.omega, spec.config()), args)


def cmd_integrate(args):
    spec = _load(args.file, deg=args.deg, tdeg=args.tdeg)
    if spec.mode != "saddle":
        raise SaddleDeformError("integrate works on saddle-mode inputs")
    cfg = spec.config()
    omega = parse_form(spec.omega, cfg.context())
    zstar = tuple(args.z or ())
    path = CyclePath(args.c, args.x0, zstar, args.t)
    quad = cycle_integral_numeric(omega, path, args.samples)
    poly = cycle_integral_symbolic(omega)
    sym = 2j * cmath.pi * poly.evaluate(args.c, zstar, args.t)
    out = {"path": path.to_json(), "samples": args.samples,
           "quadrature": {"re": quad.real, "im": quad.imag},
           "symbolic": {"re": sym.real, "im": sym.imag},
           "cycle_polynomial": poly.to_json(), "abs_error": abs(quad - sym)}
    print(json.dumps(out, indent=2 if args.pretty else None, ensure_ascii=False))


def cmd_corpus(args):
    ids = ["ex0", "ex1", "ex2", "ex3"] if args.example == "all" else [args.example]
    results = [corpus_check(e) for e in ids]
    if args.json:
        print(json.dumps([r.to_json() for r in results], ensure_ascii=False))
    else:
        for r in results:
            print(f"{r.example_id}: {'pass' if r.passed else 'FAIL'}")
            for name, ok in r.checks.items():
                print(f"  {'ok  ' if ok else 'FAIL'} {name}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="saddle-deform",
                                description="Exact analysis of deformations of d(xy) = 0.")
    sub = p.add_subparsers(dest="command", required=True)

    def truncation(sp):
        sp.add_argument("--deg", type=int, help="spatial truncation degree D")
        sp.add_argument("--tdeg", type=int, help="parameter truncation order J")

    def output(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--json", action="store_true", help="compact JSON report")
        g.add_argument("--pretty", action="store_true", help="indented JSON report")

    a = sub.add_parser("analyze", help="run the full analysis on an input file")
    a.add_argument("file")
    truncation(a)
    output(a)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("center", help="real-center pipeline on an input file")
    c.add_argument("file")
    truncation(c)
    output(c)
    c.set_defaults(func=cmd_center)

    i = sub.add_parser("integrate", help="numeric cycle integral against the symbolic value")
    i.add_argument("file")
    i.add_argument("--c", type=parse_complex, required=True, help="fiber value, e.g. 0.2 or 0.1+0.3i")
    i.add_argument("--x0", type=parse_complex, default=1.0, help="anchor of the cycle (nonzero)")
    i.add_argument("--samples", type=int, default=256)
    i.add_argument("--t", type=parse_complex, default=0.0, help="parameter value")
    i.add_argument("--z", type=parse_complex, nargs="*", help="values of z1, z2, ...")
    i.add_argument("--pretty", action="store_true")
    truncation(i)
    i.set_defaults(func=cmd_integrate)

    k = sub.add_parser("corpus", help="check the reference examples")
    k.add_argument("example", nargs="?", default="all", choices=["ex0", "ex1", "ex2", "ex3", "all"])
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        args.func(args)
    except (SaddleDeformError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 2
    return 0
