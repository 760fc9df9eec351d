"""Truncated power series, i.e. polynomials modulo M^(cap+1).

This is the naive representation the lazy engine is tested against.  It
deliberately shares nothing with :mod:`mpseries.series` beyond the
polynomial type; the inverse in particular is the geometric partial sum
``c^-1 (1 + g + ... + g^cap)`` with ``g = 1 - f/c`` rather than a recursive
division.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CapMismatch, NotInvertible
from .poly import MultiPoly


@dataclass(frozen=True)
class TruncatedSeries:
    cap: int
    poly: MultiPoly

    def __post_init__(self):
        if self.poly.total_degree() > self.cap:
            object.__setattr__(self, "poly", self.poly.truncate(self.cap))

    @classmethod
    def of(cls, p: MultiPoly, cap: int) -> "TruncatedSeries":
        return cls(cap, p.truncate(cap))


def _same_cap(a: TruncatedSeries, b: TruncatedSeries) -> int:
    if a.cap != b.cap:
        raise CapMismatch(f"caps {a.cap} and {b.cap}")
    return a.cap


def t_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(_same_cap(a, b), a.poly + b.poly)


def t_neg(a: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(a.cap, -a.poly)


def t_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return t_add(a, t_neg(b))


def t_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    cap = _same_cap(a, b)
    out: dict = {}
    for ea, ca in a.poly.terms.items():
        da = sum(ea)
        for eb, cb in b.poly.terms.items():
            if da + sum(eb) > cap:
                continue
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return TruncatedSeries(cap, MultiPoly(a.poly.vars, out))


def t_pow(a: TruncatedSeries, n: int) -> TruncatedSeries:
    if n < 0:
        return t_pow(t_inverse(a), -n)
    out = TruncatedSeries(a.cap, MultiPoly.one(a.poly.vars))
    for _ in range(n):
        out = t_mul(out, a)
    return out


def t_inverse(a: TruncatedSeries) -> TruncatedSeries:
    c = a.poly.constant_term()
    if not c:
        raise NotInvertible("constant term is zero")
    one = MultiPoly.one(a.poly.vars)
    g = TruncatedSeries(a.cap, one - a.poly / c)
    # 1 + g + ... + g^cap, higher powers of g vanish mod M^(cap+1)
    total = TruncatedSeries(a.cap, one)
    power = total
    for _ in range(a.cap):
        power = t_mul(power, g)
        total = t_add(total, power)
    return TruncatedSeries(a.cap, total.poly / Fraction(c))


def t_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _same_cap(a, b)
    return t_mul(a, t_inverse(b))
