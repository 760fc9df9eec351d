"""Lazy multivariate power series.

Every :class:`PowerSeries` is a node holding a generator (degree -> homogeneous
part), references to the series it was built from (its *ancestors*), an
append-only cache of computed homogeneous parts and the resulting precision.
Arithmetic never computes anything up front: it wires a new generator on top
of the operands' generators.  Division is the one exception, it reads the
constant terms of both operands to reject non-units immediately.

The graph is not thread-safe.  A series and everything it depends on should
be owned by one thread at a time; all cache mutation happens inside
:meth:`PowerSeries.homogeneous_part`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Union

from .errors import (
    EmptyList,
    EmptyVarSet,
    GeneratorDegreeMismatch,
    LengthMismatch,
    NotInvertible,
    VarSetMismatch,
)
from .poly import (
    MultiPoly,
    VarSet,
    add_into,
    addmul_into,
    format_terms,
    from_accumulator,
    make_varset,
)

Generator = Callable[["PowerSeries", int], MultiPoly]
SeriesLike = Union["PowerSeries", MultiPoly, int, Fraction]


@dataclass(frozen=True)
class DisplayStyle:
    """How many terms and which degrees ``render`` shows."""

    max_terms: int = 50
    max_degree_shown: int = 5
    show_label: bool = False

    def __post_init__(self):
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")
        if self.max_degree_shown < 0:
            raise ValueError("max_degree_shown must be non-negative")


_default_style = DisplayStyle()


def set_default_display_style(style: DisplayStyle) -> None:
    global _default_style
    _default_style = style


def get_default_display_style() -> DisplayStyle:
    return _default_style


class PowerSeries:
    """A lazily evaluated power series in the variables ``vars``.

    Nodes are shared by reference: a derived series keeps its operands as
    ``ancestors`` and never copies them.  ``calls`` counts generator
    invocations, which is how the tests check that no degree of any node is
    generated twice.
    """

    __slots__ = (
        "vars", "_cache", "_gen", "ancestors", "label", "kind",
        "degree_bound", "exact", "calls", "_active", "display_style", "__weakref__",
    )

    def __init__(
        self,
        vars: Sequence[str],
        gen: Optional[Generator],
        *,
        ancestors: Sequence["PowerSeries"] = (),
        label: Optional[str] = None,
        kind: str = "custom",
        cache: Optional[List[MultiPoly]] = None,
        degree_bound: Optional[int] = None,
        exact: bool = False,
    ):
        self.vars: VarSet = tuple(vars)
        self._gen = gen
        self.ancestors = tuple(ancestors)
        self.label = label
        self.kind = kind
        self._cache: List[MultiPoly] = list(cache) if cache else []
        # upper bound on the degree of any nonzero part, when known
        self.degree_bound = degree_bound
        # known to equal a polynomial of degree <= degree_bound
        self.exact = exact and degree_bound is not None
        self.calls = 0
        self._active: Optional[int] = None
        self.display_style: Optional[DisplayStyle] = None

    @property
    def precision(self) -> int:
        """Highest degree cached so far, ``-1`` when nothing is."""
        return len(self._cache) - 1

    @property
    def generating(self) -> bool:
        return self._active is not None

    def cached_parts(self) -> List[MultiPoly]:
        return list(self._cache)

    def homogeneous_part(self, d: int) -> MultiPoly:
        cache = self._cache
        if d < len(cache):
            return cache[d]
        if d < 0:
            raise ValueError("degree must be non-negative")
        if self._active is not None:
            raise RuntimeError(
                f"degree {d} requested while degree {self._active} of the same series is being generated"
            )
        for k in range(len(cache), d + 1):
            self._active = k
            try:
                self.calls += 1
                part = self._gen(self, k)
            finally:
                self._active = None
            cache.append(part)
        return cache[d]

    def update_precision(self, d: int) -> None:
        self.homogeneous_part(d)

    def truncate(self, d: int) -> MultiPoly:
        acc: dict = {}
        for k in range(d + 1):
            add_into(acc, self.homogeneous_part(k))
        return from_accumulator(self.vars, acc)

    def get_coefficient(self, monomial) -> Fraction:
        exps = _monomial_exponents(self.vars, monomial)
        return self.homogeneous_part(sum(exps)).coefficient(exps)

    def is_unit(self) -> bool:
        return self.homogeneous_part(0).constant_term() != 0

    # operators

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            _check_vars(self.vars, other)
            return other
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise VarSetMismatch(f"{self.vars} vs {other.vars}")
            return from_polynomial(other)
        return from_polynomial(MultiPoly.constant(self.vars, other))

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return add_many([self, other])

    def __radd__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return add_many([other, self])

    def __neg__(self):
        return negate(self)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return subtract(self, other)

    def __rsub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return subtract(other, self)

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return mul_many([self, other])

    def __rmul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return mul_many([other, self])

    def __truediv__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return divide(self, other)

    def __rtruediv__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return divide(other, self)

    def __pow__(self, n: int):
        return exponentiate(self, n)

    def __str__(self) -> str:
        return render(self, self.display_style or _default_style)

    def __repr__(self) -> str:
        return f"<PowerSeries {self.kind} in {','.join(self.vars)} precision={self.precision}>"


def _check_vars(vars: VarSet, *series: "PowerSeries") -> None:
    for s in series:
        if s.vars != vars:
            raise VarSetMismatch(f"{vars} vs {s.vars}")


def _monomial_exponents(vars: VarSet, monomial) -> tuple:
    if isinstance(monomial, MultiPoly):
        m = monomial.reorder(vars)
        if len(m.terms) != 1:
            raise ValueError("expected a single monomial")
        (e,) = m.terms
        return e
    if isinstance(monomial, dict):
        unknown = set(monomial) - set(vars)
        if unknown:
            raise VarSetMismatch(f"unknown variables {sorted(unknown)}")
        return tuple(int(monomial.get(v, 0)) for v in vars)
    e = tuple(int(x) for x in monomial)
    if len(e) != len(vars):
        raise ValueError(f"exponent vector {e} does not match variables {vars}")
    return e


def _label(template: str, *parts: "PowerSeries") -> Optional[str]:
    labels = [p.label for p in parts]
    if any(lab is None for lab in labels):
        return None
    return template.format(*labels)


def _bound_sum(bounds):
    if any(b is None for b in bounds):
        return None
    return sum(bounds)


# constructors

def from_polynomial(p: MultiPoly) -> PowerSeries:
    """The series of a polynomial; its homogeneous parts are cached immediately."""
    deg = p.total_degree()
    top = int(deg) if p else 0
    cache = [p.homogeneous_component(k) for k in range(top + 1)]

    def gen(s, d):
        return p.homogeneous_component(d)

    return PowerSeries(
        p.vars, gen, label=str(p), kind="polynomial", cache=cache,
        degree_bound=int(deg) if p else -1, exact=True,
    )


def constant(vars: Sequence[str], c) -> PowerSeries:
    return from_polynomial(MultiPoly.constant(make_varset(vars), c))


def one(vars: Sequence[str]) -> PowerSeries:
    return constant(vars, 1)


def zero(vars: Sequence[str]) -> PowerSeries:
    return constant(vars, 0)


def from_generator(g: Callable[[int], object], vars: Sequence[str], label: Optional[str] = None) -> PowerSeries:
    """Series whose degree-``d`` part is ``g(d)``.

    ``g`` may return a :class:`MultiPoly` over ``vars`` or, for convenience,
    an exact scalar (only meaningful in degree 0).  The result is checked for
    homogeneity every time the generator runs.
    """
    vars = make_varset(vars)

    def gen(s, d):
        part = g(d)
        if not isinstance(part, MultiPoly):
            part = MultiPoly.constant(vars, part)
        if part.vars != vars:
            raise VarSetMismatch(f"generator returned a polynomial in {part.vars}, expected {vars}")
        if not part.is_homogeneous(d):
            raise GeneratorDegreeMismatch(f"generator returned {part} for degree {d}")
        return part

    return PowerSeries(vars, gen, label=label, kind="custom")


def geometric_series(vars: Sequence[str]) -> PowerSeries:
    """``1/(1 - X1 - ... - Xn)``: the degree-d part is ``(X1 + ... + Xn)^d``."""
    vars = make_varset(vars)
    if not vars:
        raise EmptyVarSet("geometric series needs at least one variable")
    linear = MultiPoly(vars, {tuple(int(i == j) for j in range(len(vars))): 1 for i in range(len(vars))})

    def gen(s, d):
        if d == 0:
            return MultiPoly.one(vars)
        return s.homogeneous_part(d - 1) * linear

    return PowerSeries(vars, gen, label=f"1/(1 - {' - '.join(vars)})", kind="geometric")


def sum_of_all_monomials(vars: Sequence[str]) -> PowerSeries:
    """Every monomial with coefficient one, i.e. ``prod 1/(1 - Xi)``."""
    vars = make_varset(vars)
    if not vars:
        raise EmptyVarSet("sum of all monomials needs at least one variable")
    n = len(vars)

    def gen(s, d):
        terms = {}
        for combo in itertools.combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            terms[tuple(e)] = Fraction(1)
        return MultiPoly(vars, terms, _trusted=True)

    label = "1/(" + "*".join(f"(1 - {v})" for v in vars) + ")"
    return PowerSeries(vars, gen, label=label, kind="all_monomials")


# arithmetic

def add_many(terms: Sequence[PowerSeries], coeffs: Optional[Sequence[SeriesLike]] = None) -> PowerSeries:
    """Lazy ``c1*f1 + ... + cm*fm`` with optional polynomial coefficients."""
    terms = list(terms)
    if not terms:
        raise EmptyList("add_many needs at least one series")
    vars = terms[0].vars
    _check_vars(vars, *terms)
    if coeffs is None:
        scaled = [((0, None),) for _ in terms]
        coeff_bounds = [0] * len(terms)
        label = _label(" + ".join(["({})"] * len(terms)), *terms)
    else:
        coeffs = list(coeffs)
        if len(coeffs) != len(terms):
            raise LengthMismatch(f"{len(terms)} series but {len(coeffs)} coefficients")
        polys = []
        for c in coeffs:
            if not isinstance(c, MultiPoly):
                c = MultiPoly.constant(vars, c)
            elif c.vars != vars:
                raise VarSetMismatch(f"{vars} vs {c.vars}")
            polys.append(c)
        scaled = [tuple(_coefficient_parts(c)) for c in polys]
        coeff_bounds = [int(c.total_degree()) if c else -1 for c in polys]
        labels = [f.label for f in terms]
        label = None if None in labels else " + ".join(f"({c})*({l})" for c, l in zip(polys, labels))

    bounds = [None if f.degree_bound is None else (f.degree_bound + cb) for f, cb in zip(terms, coeff_bounds)]
    degree_bound = None if None in bounds else max(bounds, default=-1)

    def gen(s, d):
        acc: dict = {}
        for f, parts in zip(terms, scaled):
            fb = f.degree_bound
            for k, c in parts:
                if k > d or (fb is not None and d - k > fb):
                    continue
                part = f.homogeneous_part(d - k)
                if not part:
                    continue
                if c is None:
                    add_into(acc, part)
                elif isinstance(c, Fraction):
                    add_into(acc, part, c)
                else:
                    addmul_into(acc, c, part)
        return from_accumulator(vars, acc)

    return PowerSeries(vars, gen, ancestors=terms, label=label, kind="sum", degree_bound=degree_bound)


def _coefficient_parts(c: MultiPoly):
    # (degree, multiplier) pairs; a constant multiplier is kept as a scalar
    for k, part in sorted(c.by_degree().items()):
        if k == 0:
            v = part.constant_term()
            yield k, (None if v == 1 else v)
        else:
            yield k, part


def negate(f: PowerSeries) -> PowerSeries:
    def gen(s, d):
        return -f.homogeneous_part(d)

    return PowerSeries(
        f.vars, gen, ancestors=(f,), label=_label("-({})", f), kind="negate", degree_bound=f.degree_bound
    )


def subtract(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    _check_vars(f.vars, g)
    return add_many([f, g], [1, -1])


def mul_many(factors: Sequence[PowerSeries]) -> PowerSeries:
    """Lazy product ``f1 * f2 * ... * fm``.

    The node keeps the homogeneous parts of every prefix product
    ``f1 * ... * fj`` so each degree costs one pass over the factors.  Within a
    convolution the left part is inspected first and the right operand is not
    touched when it is zero; the Weierstrass solver relies on this.
    """
    factors = list(factors)
    if not factors:
        raise EmptyList("mul_many needs at least one series")
    vars = factors[0].vars
    _check_vars(vars, *factors)
    if len(factors) == 1:
        return add_many(factors)
    prefixes: List[List[MultiPoly]] = [[] for _ in factors[1:]]
    prefix_bounds = []
    b = factors[0].degree_bound
    for f in factors[1:]:
        b = _bound_sum([b, f.degree_bound])
        prefix_bounds.append(b)

    def gen(s, d):
        left_get = factors[0].homogeneous_part
        left_bound = factors[0].degree_bound
        part = None
        for j, f in enumerate(factors[1:]):
            fb = f.degree_bound
            acc: dict = {}
            top = d if left_bound is None else min(d, left_bound)
            for k in range(top + 1):
                if fb is not None and d - k > fb:
                    continue
                left = left_get(k)
                if not left:
                    continue
                right = f.homogeneous_part(d - k)
                if right:
                    addmul_into(acc, left, right)
            part = from_accumulator(vars, acc)
            store = prefixes[j]
            if len(store) == d:
                store.append(part)
            else:
                store[d] = part
            left_get = store.__getitem__
            left_bound = prefix_bounds[j]
        return part

    label = _label("*".join(["({})"] * len(factors)), *factors)
    return PowerSeries(vars, gen, ancestors=factors, label=label, kind="product", degree_bound=prefix_bounds[-1])


def divide(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """Lazy quotient ``f / g`` for a unit ``g``.

    Degree 0 of both operands is read right away; the quotient's degree-d
    part then solves ``f_d = sum_i g_i q_(d-i)`` for ``q_d`` using the
    already-cached lower parts of the quotient itself.
    """
    _check_vars(f.vars, g)
    g0 = g.homogeneous_part(0).constant_term()
    if not g0:
        raise NotInvertible("invalid input: not invertible (zero constant term)")
    inv_g0 = 1 / g0
    vars = f.vars
    gb = g.degree_bound

    def gen(s, d):
        acc: dict = {}
        add_into(acc, f.homogeneous_part(d))
        top = d if gb is None else min(d, gb)
        for i in range(1, top + 1):
            gi = g.homogeneous_part(i)
            if gi:
                addmul_into(acc, gi, s.homogeneous_part(d - i), -1)
        return from_accumulator(vars, acc).scale(inv_g0)

    q0 = f.homogeneous_part(0).scale(inv_g0)
    return PowerSeries(
        vars, gen, ancestors=(f, g), label=_label("({})/({})", f, g), kind="quotient", cache=[q0]
    )


def inverse(f: PowerSeries) -> PowerSeries:
    q = divide(one(f.vars), f)
    q.label = _label("1/({})", f)
    return q


def exponentiate(f: PowerSeries, n: int) -> PowerSeries:
    """``f**n`` by binary powering; negative ``n`` goes through the inverse."""
    if not isinstance(n, int):
        raise TypeError("exponent must be an integer")
    if n == 0:
        return one(f.vars)
    base = inverse(f) if n < 0 else f
    n = abs(n)
    result = None
    while n:
        if n & 1:
            result = base if result is None else mul_many([result, base])
        n >>= 1
        if n:
            base = mul_many([base, base])
    return result


# queries

@dataclass(frozen=True)
class Order:
    value: int


@dataclass(frozen=True)
class ZeroThrough:
    """Every part up to ``bound`` is zero; the true order is unknown."""

    bound: int


def order(f: PowerSeries, bound: int):
    for d in range(bound + 1):
        if f.homogeneous_part(d):
            return Order(d)
    return ZeroThrough(bound)


def homogeneous_part(f: PowerSeries, d: int) -> MultiPoly:
    return f.homogeneous_part(d)


def truncate(f: PowerSeries, d: int) -> MultiPoly:
    return f.truncate(d)


def precision(f: PowerSeries) -> int:
    return f.precision


def update_precision(f: PowerSeries, d: int) -> None:
    f.update_precision(d)


def get_coefficient(f: PowerSeries, monomial) -> Fraction:
    return f.get_coefficient(monomial)


def set_display_style(f: PowerSeries, style: Optional[DisplayStyle]) -> None:
    f.display_style = style


def render(f: PowerSeries, style: Optional[DisplayStyle] = None) -> str:
    """Text such as ``1 + x + y + O(deg 2)``.

    Parts are listed by ascending degree, each in descending graded-lex order.
    Series built directly from a polynomial that fits in the shown degrees
    print without the ``O(...)`` tail since they are exact.
    """
    style = style or f.display_style or _default_style
    shown = style.max_degree_shown
    items = []
    truncated = False
    for d in range(shown + 1):
        for item in f.homogeneous_part(d):
            if len(items) == style.max_terms:
                truncated = True
                break
            items.append(item)
        if truncated:
            break
    text = format_terms(f.vars, items)
    if truncated:
        text += " + ..."
    exact = f.exact and f.degree_bound <= shown and not truncated
    if not exact:
        text += f" + O(deg {shown + 1})"
    if style.show_label and f.label is not None:
        text += f"  [= {f.label}]"
    return text
