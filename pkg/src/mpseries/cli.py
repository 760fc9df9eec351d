"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 not invertible,
4 not prepared, 5 roots not rational.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import bench
from . import series as S
from . import upops as U
from .errors import (
    LeadingCoefficientNotUnit,
    NotInvertible,
    NotPrepared,
    ParseError,
    RootsNotRational,
    SeriesError,
    VariableClash,
)
from .parser import parse_polynomial
from .poly import MultiPoly

EXIT_USAGE = 2
EXIT_NOT_INVERTIBLE = 3
EXIT_NOT_PREPARED = 4
EXIT_ROOTS_NOT_RATIONAL = 5


def _varlist(text: str) -> tuple:
    names = tuple(v.strip() for v in text.split(",") if v.strip())
    if len(set(names)) != len(names):
        raise argparse.ArgumentTypeError(f"repeated variable in {text!r}")
    return names


def _series(args, text: str) -> S.PowerSeries:
    return S.from_polynomial(parse_polynomial(text, args.vars))


def _style(args) -> S.DisplayStyle:
    return S.DisplayStyle(max_terms=args.max_terms, max_degree_shown=args.degree)


def _emit_series(args, f: S.PowerSeries, out) -> None:
    if args.format == "json":
        parts = [{"degree": d, "poly": str(f.homogeneous_part(d))} for d in range(args.degree + 1)]
        print(json.dumps({"parts": parts}), file=out)
    else:
        print(S.render(f, _style(args)), file=out)


def _emit_poly(args, p: MultiPoly, out) -> None:
    if args.format == "json":
        parts = [{"degree": d, "poly": str(p.homogeneous_component(d))} for d in range(args.degree + 1)]
        print(json.dumps({"parts": parts}), file=out)
    else:
        print(p, file=out)


def _upops(args, text: str) -> U.Upops:
    if args.main in args.vars:
        raise VariableClash(f"main variable {args.main!r} is also a series variable")
    p = parse_polynomial(text, args.vars + (args.main,))
    return U.upops_from_polynomial(p, args.main)


# commands

def cmd_truncate(args, out):
    _emit_poly(args, _series(args, args.expr).truncate(args.degree), out)


def cmd_hpart(args, out):
    p = _series(args, args.expr).homogeneous_part(args.degree)
    if args.format == "json":
        print(json.dumps({"parts": [{"degree": args.degree, "poly": str(p)}]}), file=out)
    else:
        print(p, file=out)


def cmd_add(args, out):
    _emit_series(args, S.add_many([_series(args, e) for e in args.exprs]), out)


def cmd_subtract(args, out):
    _emit_series(args, S.subtract(_series(args, args.left), _series(args, args.right)), out)


def cmd_negate(args, out):
    _emit_series(args, S.negate(_series(args, args.expr)), out)


def cmd_multiply(args, out):
    _emit_series(args, S.mul_many([_series(args, e) for e in args.exprs]), out)


def cmd_power(args, out):
    _emit_series(args, S.exponentiate(_series(args, args.expr), args.exponent), out)


def cmd_invert(args, out):
    _emit_series(args, S.inverse(_series(args, args.expr)), out)


def cmd_divide(args, out):
    _emit_series(args, S.divide(_series(args, args.left), _series(args, args.right)), out)


def cmd_weierstrass(args, out):
    p, alpha = U.weierstrass_preparation(_upops(args, args.expr))
    style = _style(args)
    print(f"p = {U.render_upops(p, style)}", file=out)
    print(f"alpha = {U.render_upops(alpha, style)}", file=out)


def cmd_hensel(args, out):
    res = U.hensel_factorize(_upops(args, args.expr))
    style = _style(args)
    print(f"leading = {S.render(res.leading_unit, style)}", file=out)
    for i, fac in enumerate(res.factors, 1):
        print(
            f"f{i} = {U.render_upops(fac.poly, style)}  [root {fac.root}, multiplicity {fac.multiplicity}]",
            file=out,
        )


def cmd_taylor(args, out):
    g = U.taylor_shift(_upops(args, args.expr), args.shift)
    print(U.render_upops(g, _style(args)), file=out)


def cmd_evaluate(args, out):
    print(U.evaluate_at_origin(_upops(args, args.expr)), file=out)


def cmd_bench(args, out):
    bench.run_suite(args.suite, args.max_param, out)


def _fraction(text: str):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mpseries", description="Lazy multivariate power series over QQ.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vars", type=_varlist, default=(), help="comma-separated series variables")
    common.add_argument("--degree", type=int, default=5, help="highest degree shown (default 5)")
    common.add_argument("--max-terms", type=int, default=1000, help="term limit before '...'")
    common.add_argument("--format", choices=("text", "json"), default="text")

    upops_common = argparse.ArgumentParser(add_help=False, parents=[common])
    upops_common.add_argument("--main", required=True, help="main (polynomial) variable")

    def add(name, func, help, parents=(common,)):
        p = sub.add_parser(name, help=help, parents=list(parents))
        p.set_defaults(func=func)
        return p

    add("truncate", cmd_truncate, "sum of the parts of degree <= d").add_argument("expr")
    add("hpart", cmd_hpart, "homogeneous part of degree d").add_argument("expr")
    add("add", cmd_add, "sum of one or more series").add_argument("exprs", nargs="+")
    p = add("subtract", cmd_subtract, "difference of two series")
    p.add_argument("left")
    p.add_argument("right")
    add("negate", cmd_negate, "negation").add_argument("expr")
    add("multiply", cmd_multiply, "product of one or more series").add_argument("exprs", nargs="+")
    p = add("power", cmd_power, "integer power")
    p.add_argument("expr")
    p.add_argument("exponent", type=int)
    add("invert", cmd_invert, "multiplicative inverse").add_argument("expr")
    p = add("divide", cmd_divide, "quotient of two series")
    p.add_argument("left")
    p.add_argument("right")

    add("weierstrass", cmd_weierstrass, "Weierstrass preparation f = p*alpha", (upops_common,)).add_argument("expr")
    add("hensel", cmd_hensel, "factorization by Hensel's lemma", (upops_common,)).add_argument("expr")
    p = add("taylor", cmd_taylor, "substitute main -> main + c", (upops_common,))
    p.add_argument("expr")
    p.add_argument("--shift", type=_fraction, required=True)
    add("evaluate", cmd_evaluate, "value at the origin of the series variables", (upops_common,)).add_argument("expr")

    p = sub.add_parser("bench", help="timing runs written as CSV")
    p.add_argument("suite")
    p.add_argument("max_param", type=int, nargs="?")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if getattr(args, "degree", 0) < 0:
        print("error: --degree must be non-negative", file=err)
        return EXIT_USAGE
    if getattr(args, "max_terms", 1) < 1:
        print("error: --max-terms must be positive", file=err)
        return EXIT_USAGE
    try:
        args.func(args, out)
    except ParseError as e:
        print(f"parse error: {e}", file=err)
        return EXIT_USAGE
    except RootsNotRational as e:
        print(f"residual = {e.residual}", file=out)
        print(f"error: {e}", file=err)
        return EXIT_ROOTS_NOT_RATIONAL
    except (NotInvertible, LeadingCoefficientNotUnit) as e:
        print(f"error: {e}", file=err)
        return EXIT_NOT_INVERTIBLE
    except NotPrepared as e:
        print(f"error: {e}", file=err)
        return EXIT_NOT_PREPARED
    except (SeriesError, ValueError) as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
