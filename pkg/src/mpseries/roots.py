"""Rational roots of univariate polynomials over QQ."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .poly import MultiPoly


@dataclass(frozen=True)
class RationalRoots:
    """``p = leading * prod (x - r)^k * residual`` with ``residual`` monic."""

    roots: List[Tuple[Fraction, int]]
    residual: MultiPoly
    leading: Fraction

    @property
    def splits(self) -> bool:
        return self.residual.total_degree() <= 0


def _divisors(n: int) -> List[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _synthetic_division(coeffs: List[Fraction], r: Fraction):
    """Divide the polynomial with ascending ``coeffs`` by ``x - r``; returns (quotient, remainder)."""
    out = [Fraction(0)] * (len(coeffs) - 1)
    acc = Fraction(0)
    for i in range(len(coeffs) - 1, 0, -1):
        acc = acc * r + coeffs[i]
        out[i - 1] = acc
    rem = acc * r + coeffs[0]
    return out, rem


def dense_coefficients(p: MultiPoly) -> List[Fraction]:
    if len(p.vars) != 1:
        raise ValueError(f"expected a univariate polynomial, got variables {p.vars}")
    deg = int(p.total_degree()) if p else 0
    return [p.coefficient((i,)) for i in range(deg + 1)]


def rational_roots(p: MultiPoly) -> RationalRoots:
    """All rational roots of ``p`` with multiplicities, in ascending order.

    Candidates come from the rational root theorem applied to ``p`` with its
    denominators cleared; each one is deflated out by synthetic division for
    as long as it divides.
    """
    if not p:
        raise ValueError("the zero polynomial has no finite set of roots")
    coeffs = dense_coefficients(p)
    leading = coeffs[-1]
    roots: List[Tuple[Fraction, int]] = []

    zeros = 0
    while coeffs[zeros] == 0:
        zeros += 1
    if zeros:
        roots.append((Fraction(0), zeros))
    coeffs = coeffs[zeros:]

    if len(coeffs) > 1:
        scale = math.lcm(*(c.denominator for c in coeffs))
        ints = [int(c * scale) for c in coeffs]
        candidates = sorted(
            {Fraction(s * a, b) for a in _divisors(ints[0]) for b in _divisors(ints[-1]) for s in (1, -1)}
        )
        for r in candidates:
            mult = 0
            while len(coeffs) > 1:
                q, rem = _synthetic_division(coeffs, r)
                if rem:
                    break
                coeffs = q
                mult += 1
            if mult:
                roots.append((r, mult))
            if len(coeffs) == 1:
                break

    roots.sort()
    lc = coeffs[-1]
    residual = MultiPoly(p.vars, {(i,): c / lc for i, c in enumerate(coeffs)})
    return RationalRoots(roots, residual, leading)


def from_roots(var: str, roots: Sequence[Tuple[Fraction, int]]) -> MultiPoly:
    x = MultiPoly.variable((var,), var)
    out = MultiPoly.one((var,))
    for r, k in roots:
        out = out * (x - r) ** k
    return out
