"""Desk-scale timing runs over the standard experiment families, written as CSV.

Suites and the meaning of their ``param`` column:

``inverse``      precision d; computes 1/f and (1/f)*f for f1 = 1+X1+X2,
                 f2 = 1+X1+X2+X3 and f3 = 2+(X1+X2)/3
``nary``         number of summands k; sums k copies of 1/(1-x-y) once with
                 one m-ary addition and once with a fold of binary additions
``weierstrass``  precision r; prepares the two 1/(1+X1+X2)*X3^k families, k = 3..6
``hensel``       precision r; factors prod (X2 - i) + X1 (X2^(k-1) + X2), k = 3, 4
``taylor``       precision r; shifts the same polynomials by X2 -> X2 + 1

Rows are ordered by ``param`` first so the column is non-decreasing.
Timings come from a single run on a monotonic clock.
"""
from __future__ import annotations

import csv
import sys
import time
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Tuple

from . import series as S
from . import upops as U
from .errors import UnknownSuite
from .poly import MultiPoly

HEADER = ["case", "param", "seconds", "peak_terms"]

DEFAULT_MAX = {"inverse": 100, "nary": 16, "weierstrass": 20, "hensel": 12, "taylor": 12}
NARY_DEGREE = 30


def _vars(n: int) -> Tuple[str, ...]:
    return tuple(f"X{i}" for i in range(1, n + 1))


def _x(vars, name) -> MultiPoly:
    return MultiPoly.variable(vars, name)


def _peak(nodes: Iterable[S.PowerSeries]) -> int:
    return max((len(p) for n in nodes for p in n.cached_parts()), default=0)


def inverse_cases() -> Dict[str, MultiPoly]:
    v2, v3 = _vars(2), _vars(3)
    return {
        "f1": 1 + _x(v2, "X1") + _x(v2, "X2"),
        "f2": 1 + _x(v3, "X1") + _x(v3, "X2") + _x(v3, "X3"),
        "f3": 2 + Fraction(1, 3) * (_x(v2, "X1") + _x(v2, "X2")),
    }


def weierstrass_family(which: int, k: int) -> U.Upops:
    """Coefficients (in X3) of the two preparation benchmarks over QQ[[X1, X2]]."""
    v = _vars(2)
    x1, x2, one = _x(v, "X1"), _x(v, "X2"), MultiPoly.one(v)
    lead = S.inverse(S.from_polynomial(1 + x1 + x2))
    if which == 1:
        # lead*X3^k + X3^(k-1) + ... + X3^2 + X2*X3 + X1
        coeffs = [x1, x2] + [one] * (k - 2) + [lead]
    else:
        # lead*X3^k + X2*X3^(k-1) + X3^(k-2) + ... + X3 + X1
        coeffs = [x1] + [one] * (k - 2) + [x2, lead]
    return U.Upops("X3", coeffs, v)


def hensel_family(k: int) -> U.Upops:
    v = _vars(2)
    x1, x2 = _x(v, "X1"), _x(v, "X2")
    p = MultiPoly.one(v)
    for i in range(1, k + 1):
        p = p * (x2 - i)
    p = p + x1 * (x2 ** (k - 1) + x2)
    return U.upops_from_polynomial(p, "X2")


def _timed(fn: Callable[[], int]) -> Tuple[float, int]:
    t0 = time.perf_counter()
    peak = fn()
    return time.perf_counter() - t0, peak


def _run_inverse(d: int) -> List[Tuple[str, float, int]]:
    rows = []
    for name, f in inverse_cases().items():
        def work(f=f):
            fs = S.from_polynomial(f)
            q = S.inverse(fs)
            S.mul_many([q, fs]).update_precision(d)
            return _peak([q])
        rows.append((name, *_timed(work)))
    return rows


def _run_nary(k: int) -> List[Tuple[str, float, int]]:
    def mary():
        g = S.geometric_series(("x", "y"))
        s = S.add_many([g] * k)
        s.update_precision(NARY_DEGREE)
        return _peak([s])

    def binary():
        g = S.geometric_series(("x", "y"))
        s = g
        for _ in range(k - 1):
            s = S.add_many([s, g])
        s.update_precision(NARY_DEGREE)
        return _peak([s])

    return [("mary", *_timed(mary)), ("binary", *_timed(binary))]


def _run_weierstrass(r: int) -> List[Tuple[str, float, int]]:
    rows = []
    for which in (1, 2):
        for k in range(3, 7):
            def work(which=which, k=k):
                p, alpha = U.weierstrass_preparation(weierstrass_family(which, k))
                p.update_precision(r)
                alpha.update_precision(r)
                return _peak(p.coeffs + alpha.coeffs)
            rows.append((f"wp{which}_k{k}", *_timed(work)))
    return rows


def _run_hensel(r: int) -> List[Tuple[str, float, int]]:
    rows = []
    for k in (3, 4):
        def work(k=k):
            res = U.hensel_factorize(hensel_family(k))
            nodes = []
            for fac in res.factors:
                fac.poly.update_precision(r)
                nodes.extend(fac.poly.coeffs)
            return _peak(nodes)
        rows.append((f"hensel_k{k}", *_timed(work)))
    return rows


def _run_taylor(r: int) -> List[Tuple[str, float, int]]:
    rows = []
    for k in (3, 4):
        def work(k=k):
            g = U.taylor_shift(hensel_family(k), 1)
            g.update_precision(r)
            return _peak(g.coeffs)
        rows.append((f"taylor_k{k}", *_timed(work)))
    return rows


SUITES = {
    "inverse": _run_inverse,
    "nary": _run_nary,
    "weierstrass": _run_weierstrass,
    "hensel": _run_hensel,
    "taylor": _run_taylor,
}


def run_suite(suite: str, max_param: int | None = None, out=None) -> int:
    """Write the CSV for ``suite`` with params 1..max_param; returns the number of data rows."""
    if suite not in SUITES:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {', '.join(sorted(SUITES))}")
    if max_param is None:
        max_param = DEFAULT_MAX[suite]
    out = out or sys.stdout
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(HEADER)
    n = 0
    for param in range(1, max_param + 1):
        for case, seconds, peak in SUITES[suite](param):
            writer.writerow([case, param, f"{seconds:.6f}", peak])
            n += 1
        out.flush()
    return n
