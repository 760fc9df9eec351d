"""Univariate polynomials over power series (UPoPS).

A :class:`Upops` is a dense array of lazy :class:`~mpseries.series.PowerSeries`
coefficients plus the name of the main variable.  Arithmetic is inherited
from the coefficient series and is therefore lazy as well, and so are the
three structural algorithms built on top of it: Weierstrass preparation,
Taylor shift and Hensel factorization.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence, Tuple, Union

from . import series as S
from .errors import (
    IndexOutOfRange,
    LeadingCoefficientNotUnit,
    NotInvertible,
    NotPrepared,
    RootsNotRational,
    VariableClash,
)
from .poly import MINUS_INFINITY, MultiPoly, add_into, from_accumulator, make_varset
from .roots import rational_roots
from .series import PowerSeries

Coefficient = Union[PowerSeries, MultiPoly, int, Fraction]


def _is_exact_zero(s: PowerSeries) -> bool:
    return s.exact and s.degree_bound == -1


def _is_exact_one(s: PowerSeries) -> bool:
    return s.exact and s.degree_bound == 0 and s.homogeneous_part(0) == 1


class Upops:
    """``a_0 + a_1 Y + ... + a_k Y^k`` with power series coefficients ``a_i``.

    Trailing coefficients that are literally the zero polynomial are dropped,
    so ``degree`` is meaningful.  A trailing coefficient that merely happens to
    vanish at every computed degree cannot be detected and is kept.
    """

    __slots__ = ("main_var", "vars", "coeffs")

    def __init__(self, main_var: str, coeffs: Sequence[Coefficient], vars: Optional[Sequence[str]] = None):
        coeffs = list(coeffs)
        if vars is None:
            for c in coeffs:
                if isinstance(c, (PowerSeries, MultiPoly)):
                    vars = c.vars
                    break
            else:
                if coeffs:
                    raise ValueError("cannot infer the coefficient variables; pass vars=")
                vars = ()
        vars = make_varset(vars)
        if main_var in vars:
            raise VariableClash(f"main variable {main_var} also appears among the coefficient variables")
        out = []
        for c in coeffs:
            if isinstance(c, PowerSeries):
                if c.vars != vars:
                    raise VariableClash(f"coefficient over {c.vars}, expected {vars}")
            elif isinstance(c, MultiPoly):
                if c.vars != vars:
                    raise VariableClash(f"coefficient over {c.vars}, expected {vars}")
                c = S.from_polynomial(c)
            else:
                c = S.constant(vars, c)
            out.append(c)
        while out and _is_exact_zero(out[-1]):
            out.pop()
        self.main_var = main_var
        self.vars = vars
        self.coeffs: List[PowerSeries] = out

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def coefficient(self, i: int) -> PowerSeries:
        if not 0 <= i < len(self.coeffs):
            raise IndexOutOfRange(f"no coefficient of {self.main_var}^{i}; degree is {self.degree}")
        return self.coeffs[i]

    @property
    def precision(self) -> int:
        """The common precision of the coefficients (``-1`` if some coefficient has nothing cached)."""
        return min((c.precision for c in self.coeffs), default=-1)

    def update_precision(self, d: int) -> None:
        for c in self.coeffs:
            c.update_precision(d)

    def truncate(self, d: int) -> MultiPoly:
        """Sum of ``truncate(a_i, d) * Y^i`` as a polynomial in the coefficient variables and ``Y``."""
        allvars = self.vars + (self.main_var,)
        acc: dict = {}
        for i, c in enumerate(self.coeffs):
            for e, v in c.truncate(d).terms.items():
                acc[e + (i,)] = v
        return from_accumulator(allvars, acc)

    def _same_ring(self, other: "Upops") -> None:
        if other.main_var != self.main_var or other.vars != self.vars:
            raise VariableClash(
                f"{self.vars}[{self.main_var}] vs {other.vars}[{other.main_var}]"
            )

    def _lift(self, other) -> "Upops":
        if isinstance(other, Upops):
            self._same_ring(other)
            return other
        return Upops(self.main_var, [other], self.vars)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return upops_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return upops_negate(self)

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return upops_add(self, upops_negate(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return scale_by_series(self, other)
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return upops_mul(self, other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __str__(self) -> str:
        return render_upops(self)

    def __repr__(self) -> str:
        return f"<Upops degree {self.degree} in {self.main_var} over {','.join(self.vars) or 'QQ'}>"


# construction

def upops_from_coefficients(main_var: str, coeffs: Sequence[Coefficient], vars: Optional[Sequence[str]] = None) -> Upops:
    return Upops(main_var, coeffs, vars)


def upops_from_polynomial(p: MultiPoly, main_var: str) -> Upops:
    """Split ``p`` by powers of ``main_var``; the remaining variables keep their order."""
    if main_var in p.vars:
        idx = p.vars.index(main_var)
        rest = p.vars[:idx] + p.vars[idx + 1:]
    else:
        idx = None
        rest = p.vars
    buckets: dict = {}
    for e, c in p.terms.items():
        if idx is None:
            k, ne = 0, e
        else:
            k, ne = e[idx], e[:idx] + e[idx + 1:]
        buckets.setdefault(k, {})[ne] = c
    top = max(buckets, default=-1)
    coeffs = [MultiPoly(rest, buckets.get(k, {})) for k in range(top + 1)]
    return Upops(main_var, coeffs, rest)


# arithmetic

def upops_add(f: Upops, g: Upops) -> Upops:
    f._same_ring(g)
    n = max(len(f.coeffs), len(g.coeffs))
    out = []
    for i in range(n):
        if i >= len(f.coeffs):
            out.append(g.coeffs[i])
        elif i >= len(g.coeffs):
            out.append(f.coeffs[i])
        else:
            out.append(S.add_many([f.coeffs[i], g.coeffs[i]]))
    return Upops(f.main_var, out, f.vars)


def upops_negate(f: Upops) -> Upops:
    return Upops(f.main_var, [S.negate(c) for c in f.coeffs], f.vars)


def upops_mul(f: Upops, g: Upops) -> Upops:
    f._same_ring(g)
    if not f.coeffs or not g.coeffs:
        return Upops(f.main_var, [], f.vars)
    out = []
    for k in range(len(f.coeffs) + len(g.coeffs) - 1):
        prods = [
            S.mul_many([f.coeffs[i], g.coeffs[k - i]])
            for i in range(max(0, k - len(g.coeffs) + 1), min(k, len(f.coeffs) - 1) + 1)
        ]
        out.append(prods[0] if len(prods) == 1 else S.add_many(prods))
    return Upops(f.main_var, out, f.vars)


def scale_by_series(f: Upops, s: PowerSeries) -> Upops:
    if s.vars != f.vars:
        raise VariableClash(f"series over {s.vars}, polynomial coefficients over {f.vars}")
    return Upops(f.main_var, [S.mul_many([c, s]) for c in f.coeffs], f.vars)


def divide_upops_by_unit_series(f: Upops, u: PowerSeries) -> Upops:
    if u.vars != f.vars:
        raise VariableClash(f"series over {u.vars}, polynomial coefficients over {f.vars}")
    if not u.is_unit():
        raise NotInvertible("divisor series has zero constant term")
    return Upops(f.main_var, [S.divide(c, u) for c in f.coeffs], f.vars)


# accessors in procedural form

def degree(f: Upops):
    return f.degree


def main_variable(f: Upops) -> str:
    return f.main_var


def get_upops_coefficient(f: Upops, i: int) -> PowerSeries:
    return f.coefficient(i)


def upops_truncate(f: Upops, d: int) -> MultiPoly:
    return f.truncate(d)


def upops_update_precision(f: Upops, d: int) -> None:
    f.update_precision(d)


def evaluate_at_origin(f: Upops) -> MultiPoly:
    """``f(0, ..., 0, Y)``; only degree 0 of each coefficient is computed."""
    return MultiPoly(
        (f.main_var,), {(i,): c.homogeneous_part(0).constant_term() for i, c in enumerate(f.coeffs)}
    )


def render_upops(f: Upops, style: Optional[S.DisplayStyle] = None) -> str:
    """Descending powers of the main variable, non-trivial coefficients in parentheses."""
    y = f.main_var
    pieces = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        text = S.render(f.coeffs[i], style)
        if text == "0":
            continue
        power = "" if i == 0 else (y if i == 1 else f"{y}^{i}")
        if " " in text:
            text = f"({text})"
        if not power:
            pieces.append(text)
        elif text == "1":
            pieces.append(power)
        elif text == "-1":
            pieces.append(f"-{power}")
        else:
            pieces.append(f"{text}*{power}")
    if not pieces:
        return "0"
    out = pieces[0]
    for piece in pieces[1:]:
        out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return out


# Weierstrass preparation

class WeierstrassState:
    """Shared state of one preparation ``f = p * alpha``.

    ``p = Y^d + b_(d-1) Y^(d-1) + ... + b_0`` and ``alpha = c_0 + ... + c_m Y^m``.
    All ``b`` and ``c`` series are advanced together one degree at a time:
    requesting any of them at degree ``r`` runs :meth:`update` for every
    missing degree up to ``r``.
    """

    def __init__(self, a: Sequence[PowerSeries], d: int, m: int):
        vars = a[0].vars
        self.vars = vars
        self.d, self.m = d, m
        zero = MultiPoly.zero(vars)
        # r - 1: the degree through which every b and c is known
        self.frontier = 0
        self._updating = False
        self._b_parts: List[List[MultiPoly]] = [[zero] for _ in range(d)]

        # the equations read b through these views of the solved parts; the
        # public nodes below only trigger updates, so a request on a public
        # node never re-enters itself
        b_view = [
            PowerSeries(vars, self._b_reader(i), ancestors=tuple(a), kind="weierstrass_b_view", cache=[zero])
            for i in range(d)
        ]
        self.b = [
            PowerSeries(vars, self._b_generator(i), ancestors=(b_view[i],), kind="weierstrass_b", cache=[zero])
            for i in range(d)
        ]

        # c_m = a_(d+m); c_i = a_(d+i) - sum_j b_j c_(d+i-j), bottom up
        inner: List[Optional[PowerSeries]] = [None] * (m + 1)
        inner[m] = a[d + m]
        for i in range(m - 1, -1, -1):
            terms = [a[d + i]]
            for j in range(d):
                idx = d + i - j
                if idx <= m:
                    terms.append(S.mul_many([b_view[j], inner[idx]]))
            inner[i] = terms[0] if len(terms) == 1 else S.add_many(terms, [1] + [-1] * (len(terms) - 1))
        self._c_inner = inner

        self.c = [
            PowerSeries(
                vars, self._c_generator(i), ancestors=(inner[i],), kind="weierstrass_c",
                cache=[inner[i].homogeneous_part(0)],
            )
            for i in range(m + 1)
        ]
        # c_m is the input coefficient a_(d+m) itself
        self.c[m].degree_bound = inner[m].degree_bound
        self.c[m].exact = inner[m].exact

        # F_i = a_i - sum_(j<i) b_j c_(i-j)
        self.F = []
        for i in range(d):
            terms = [a[i]]
            for j in range(i):
                if i - j <= m:
                    terms.append(S.mul_many([b_view[j], inner[i - j]]))
            self.F.append(terms[0] if len(terms) == 1 else S.add_many(terms, [1] + [-1] * (len(terms) - 1)))

        self._c00 = inner[0].homogeneous_part(0).constant_term()

    def _b_reader(self, i):
        def gen(node, r):
            parts = self._b_parts[i]
            if r >= len(parts):
                raise RuntimeError(f"b_{i} read at degree {r} before it was solved")
            return parts[r]
        return gen

    def _b_generator(self, i):
        def gen(node, r):
            parts = self._b_parts[i]
            if r >= len(parts):
                self.advance(r)
            return parts[r]
        return gen

    def _c_generator(self, i):
        def gen(node, r):
            self.advance(r)
            return self._c_inner[i].homogeneous_part(r)
        return gen

    def advance(self, r: int) -> None:
        if r <= self.frontier:
            return
        if self._updating:
            raise RuntimeError(f"Weierstrass state asked for degree {r} while updating degree {self.frontier + 1}")
        while self.frontier < r:
            self.update(self.frontier + 1)

    def update(self, r: int) -> None:
        """Advance every ``b_i`` and ``c_i`` from precision ``r - 1`` to ``r``."""
        self._updating = True
        try:
            c0 = self._c_inner[0]
            for i in range(self.d):
                parts = self._b_parts[i]
                acc: dict = {}
                add_into(acc, self.F[i].homogeneous_part(r))
                for k in range(1, r):
                    ck = c0.homogeneous_part(k)
                    if ck and parts[r - k]:
                        add_into(acc, parts[r - k] * ck, -1)
                parts.append(from_accumulator(self.vars, acc).scale(1 / self._c00))
            self.frontier = r
            for c in self._c_inner:
                c.homogeneous_part(r)
        finally:
            self._updating = False
        for node in self.b + self.c:
            if not node.generating:
                node.homogeneous_part(r)


def weierstrass_preparation(f: Upops) -> Tuple[Upops, Upops]:
    """Lazy ``(p, alpha)`` with ``f = p * alpha``, ``p`` monic with non-leading
    coefficients in the maximal ideal and ``alpha`` a unit.

    The degree ``d`` of ``p`` is the index of the first coefficient with a
    nonzero constant term.  Nothing beyond degree 0 is computed here.
    """
    a = f.coeffs
    d = next((i for i, ai in enumerate(a) if ai.is_unit()), None)
    if d is None:
        raise NotPrepared("no coefficient is a unit; f vanishes modulo the maximal ideal")
    one = S.one(f.vars)
    if d == 0:
        return Upops(f.main_var, [one], f.vars), f
    m = len(a) - 1 - d
    state = WeierstrassState(a, d, m)
    p = Upops(f.main_var, state.b + [one], f.vars)
    alpha = Upops(f.main_var, state.c, f.vars)
    return p, alpha


# Taylor shift

def taylor_shift(f: Upops, c) -> Upops:
    """``f(Y + c)``; coefficient ``j`` is the weighted sum ``sum_(i>=j) C(i,j) c^(i-j) a_i``."""
    c = Fraction(c)
    k = len(f.coeffs) - 1
    out = []
    for j in range(k + 1):
        terms, weights = [], []
        for i in range(j, k + 1):
            w = comb(i, j) * c ** (i - j)
            if w:
                terms.append(f.coeffs[i])
                weights.append(w)
        if len(terms) == 1 and weights[0] == 1:
            out.append(terms[0])
        else:
            out.append(S.add_many(terms, weights))
    return Upops(f.main_var, out, f.vars)


# Hensel factorization

@dataclass
class HenselFactor:
    poly: Upops
    root: Fraction
    multiplicity: int


@dataclass
class FactorizationResult:
    leading_unit: PowerSeries
    factors: List[HenselFactor]

    def product(self) -> Upops:
        out = None
        for fac in self.factors:
            out = fac.poly if out is None else out * fac.poly
        return scale_by_series(out, self.leading_unit)


def hensel_factorize(f: Upops) -> FactorizationResult:
    """Factor ``f = a_k * f_1 * ... * f_r`` where ``f_j(0, Y) = (Y - c_j)^(k_j)``.

    Roots ``c_j`` of ``f`` at the origin must all be rational; they are
    processed in increasing order.  Each factor comes back with precision 0
    and is extended on demand.
    """
    if not f.coeffs:
        raise LeadingCoefficientNotUnit("the zero polynomial has no unit leading coefficient")
    lead = f.coeffs[-1]
    if not lead.is_unit():
        raise LeadingCoefficientNotUnit("a_k must be a unit")
    fstar = f if _is_exact_one(lead) else scale_by_series(f, S.inverse(lead))
    split = rational_roots(evaluate_at_origin(fstar))
    if not split.splits:
        raise RootsNotRational(split.residual)

    factors = []
    for root, mult in split.roots:
        g = taylor_shift(fstar, root)
        p, alpha = weierstrass_preparation(g)
        if p.degree != mult:
            raise AssertionError(f"prepared degree {p.degree} differs from multiplicity {mult} of root {root}")
        fi = taylor_shift(p, -root)
        fstar = taylor_shift(alpha, -root)
        fi.update_precision(0)
        factors.append(HenselFactor(fi, root, mult))
    return FactorizationResult(lead, factors)
