"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`MultiPoly` is a map from exponent vectors to nonzero
:class:`fractions.Fraction` coefficients over a fixed, ordered tuple of
variable names.  Values are immutable once built and always kept in
expanded, collected form, so structural equality is mathematical equality.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from operator import add
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from .errors import VarSetMismatch

Monomial = Tuple[int, ...]
VarSet = Tuple[str, ...]

MINUS_INFINITY = -math.inf

_set = object.__setattr__


def make_varset(names: Iterable[str]) -> VarSet:
    """Validate and freeze an ordered collection of distinct variable names."""
    vs = tuple(names)
    if len(set(vs)) != len(vs):
        raise ValueError(f"duplicate variable names in {vs!r}")
    for v in vs:
        if not isinstance(v, str) or not v:
            raise ValueError(f"bad variable name {v!r}")
    return vs


def _coerce_scalar(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational, str)):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


def _term_key(item):
    e = item[0]
    return (sum(e), e)


class MultiPoly:
    """An immutable polynomial over QQ in the variables ``vars``.

    Terms are iterated in descending graded-lexicographic order, with the
    lexicographic tie-break following the declaration order of ``vars``.
    """

    __slots__ = ("vars", "terms", "_buckets", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[Monomial, object] | None = None, *, _trusted=False):
        vars = tuple(vars)
        if not _trusted:
            n = len(vars)
            clean = {}
            for e, c in (terms or {}).items():
                e = tuple(int(x) for x in e)
                if len(e) != n or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent vector {e} for variables {vars}")
                c = _coerce_scalar(c)
                if c:
                    clean[e] = clean.get(e, 0) + c
            terms = {e: c for e, c in clean.items() if c}
        _set(self, "vars", vars)
        _set(self, "terms", terms)
        _set(self, "_buckets", None)
        _set(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError(f"MultiPoly is immutable; cannot set {name!r}")

    # construction helpers

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "MultiPoly":
        return cls(vars, {}, _trusted=True)

    @classmethod
    def constant(cls, vars: Sequence[str], c) -> "MultiPoly":
        c = _coerce_scalar(c)
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c} if c else {}, _trusted=True)

    @classmethod
    def one(cls, vars: Sequence[str]) -> "MultiPoly":
        return cls.constant(vars, 1)

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> "MultiPoly":
        vars = tuple(vars)
        i = vars.index(name)
        e = [0] * len(vars)
        e[i] = 1
        return cls(vars, {tuple(e): Fraction(1)}, _trusted=True)

    @classmethod
    def monomial(cls, vars: Sequence[str], exps: Sequence[int], c=1) -> "MultiPoly":
        return cls(vars, {tuple(exps): c})

    # basic queries

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self.terms.items(), key=_term_key, reverse=True))

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        try:
            c = _coerce_scalar(other)
        except TypeError:
            return NotImplemented
        return self.terms == ({(0,) * len(self.vars): c} if c else {})

    def __hash__(self) -> int:
        if self._hash is None:
            _set(self, "_hash", hash((self.vars, frozenset(self.terms.items()))))
        return self._hash

    def total_degree(self):
        """Largest total degree of a term; ``-inf`` for the zero polynomial."""
        if not self.terms:
            return MINUS_INFINITY
        return max(map(sum, self.terms))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def by_degree(self) -> Dict[int, "MultiPoly"]:
        """Homogeneous components keyed by degree (only nonzero ones)."""
        if self._buckets is None:
            buckets: Dict[int, dict] = {}
            for e, c in self.terms.items():
                buckets.setdefault(sum(e), {})[e] = c
            _set(self, "_buckets", {d: MultiPoly(self.vars, t, _trusted=True) for d, t in buckets.items()})
        return self._buckets

    def homogeneous_component(self, d: int) -> "MultiPoly":
        part = self.by_degree().get(d)
        return part if part is not None else MultiPoly.zero(self.vars)

    def is_homogeneous(self, d: int) -> bool:
        return all(sum(e) == d for e in self.terms)

    def truncate(self, d: int) -> "MultiPoly":
        """Terms of total degree at most ``d``."""
        return MultiPoly(self.vars, {e: c for e, c in self.terms.items() if sum(e) <= d}, _trusted=True)

    # arithmetic

    def _check(self, other: "MultiPoly") -> None:
        if other.vars is not self.vars and other.vars != self.vars:
            raise VarSetMismatch(f"{self.vars} vs {other.vars}")

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(self.vars, _coerce_scalar(other))

    def __add__(self, other) -> "MultiPoly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s += c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly(self.vars, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other) -> "MultiPoly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return MultiPoly.zero(self.vars)
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Monomial, Fraction] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(map(add, ea, eb))
                out[e] = get(e, 0) + ca * cb
        return MultiPoly(self.vars, {e: c for e, c in out.items() if c}, _trusted=True)

    def __rmul__(self, other) -> "MultiPoly":
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def scale(self, c) -> "MultiPoly":
        c = _coerce_scalar(c)
        if not c:
            return MultiPoly.zero(self.vars)
        if c == 1:
            return self
        return MultiPoly(self.vars, {e: v * c for e, v in self.terms.items()}, _trusted=True)

    def div_scalar(self, c) -> "MultiPoly":
        c = _coerce_scalar(c)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self.scale(1 / c)

    def __truediv__(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.total_degree() == 0:
                return self.div_scalar(other.constant_term())
            return NotImplemented
        try:
            return self.div_scalar(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = MultiPoly.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # variables

    def reorder(self, vars: Sequence[str]) -> "MultiPoly":
        """Re-express over another variable tuple containing every variable actually used."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(vars)}
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(vars)
            for v, x in zip(self.vars, e):
                if x:
                    if v not in pos:
                        raise VarSetMismatch(f"variable {v} not in {vars}")
                    ne[pos[v]] = x
            out[tuple(ne)] = c
        return MultiPoly(vars, out, _trusted=True)

    # text

    def __str__(self) -> str:
        return format_terms(self.vars, list(self))

    def __repr__(self) -> str:
        return f"MultiPoly({self.vars!r}, {str(self)!r})"


def format_monomial(vars: VarSet, e: Monomial) -> str:
    return "*".join(v if x == 1 else f"{v}^{x}" for v, x in zip(vars, e) if x)


def format_terms(vars: VarSet, items: Sequence[Tuple[Monomial, Fraction]]) -> str:
    """Render ``(exponents, coefficient)`` pairs in the given order, e.g. ``x^2 + 2*x*y - 1/3``."""
    if not items:
        return "0"
    out = []
    for k, (e, c) in enumerate(items):
        mono = format_monomial(vars, e)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# In-place accumulation used by series generators; avoids materialising
# every intermediate product as its own MultiPoly.

def add_into(acc: Dict[Monomial, Fraction], p: MultiPoly, c: Fraction | int = 1) -> None:
    get = acc.get
    if c == 1:
        for e, v in p.terms.items():
            acc[e] = get(e, 0) + v
    else:
        for e, v in p.terms.items():
            acc[e] = get(e, 0) + c * v


def addmul_into(acc: Dict[Monomial, Fraction], a: MultiPoly, b: MultiPoly, c: Fraction | int = 1) -> None:
    """``acc += c * a * b``."""
    ta, tb = a.terms, b.terms
    if len(ta) < len(tb):
        ta, tb = tb, ta
    get = acc.get
    for eb, cb in tb.items():
        if c != 1:
            cb = cb * c
        for ea, ca in ta.items():
            e = tuple(map(add, ea, eb))
            acc[e] = get(e, 0) + ca * cb


def from_accumulator(vars: VarSet, acc: Dict[Monomial, Fraction]) -> MultiPoly:
    return MultiPoly(vars, {e: c for e, c in acc.items() if c}, _trusted=True)
