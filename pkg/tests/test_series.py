import random
from fractions import Fraction

import pytest

from mpseries import series as S
from mpseries.errors import (
    EmptyList,
    EmptyVarSet,
    GeneratorDegreeMismatch,
    LengthMismatch,
    NotInvertible,
    VarSetMismatch,
)
from mpseries.oracle import TruncatedSeries, t_add, t_div, t_inverse, t_mul, t_pow
from mpseries.poly import MultiPoly

from conftest import VARSETS, random_fraction, random_poly

CAP = 20
CASES = 100
V = ("x", "y")
x = MultiPoly.variable(V, "x")
y = MultiPoly.variable(V, "y")


def ps(p):
    return S.from_polynomial(p)


def T(p):
    return TruncatedSeries.of(p, CAP)


# oracle equivalence modulo M^21

def _cases(seed):
    rng = random.Random(seed)
    for _ in range(CASES):
        yield rng, rng.choice(VARSETS)


def test_add_many_matches_oracle():
    n = 0
    for rng, vars in _cases(1):
        polys = [random_poly(rng, vars) for _ in range(rng.randint(1, 4))]
        coeffs = [random_fraction(rng) for _ in polys]
        got = S.add_many([ps(p) for p in polys], coeffs).truncate(CAP)
        want = T(MultiPoly.zero(vars))
        for p, c in zip(polys, coeffs):
            want = t_add(want, T(p * c))
        assert got == want.poly
        n += 1
    assert n >= 100


def test_add_many_with_series_coefficients_matches_oracle():
    for rng, vars in _cases(2):
        polys = [random_poly(rng, vars) for _ in range(rng.randint(1, 3))]
        coeffs = [random_poly(rng, vars, max_degree=2, max_terms=2) for _ in polys]
        got = S.add_many([ps(p) for p in polys], coeffs).truncate(CAP)
        want = T(MultiPoly.zero(vars))
        for p, c in zip(polys, coeffs):
            want = t_add(want, t_mul(T(p), T(c)))
        assert got == want.poly


def test_mul_many_matches_oracle():
    for rng, vars in _cases(3):
        polys = [random_poly(rng, vars) for _ in range(rng.randint(1, 4))]
        got = S.mul_many([ps(p) for p in polys]).truncate(CAP)
        want = T(MultiPoly.one(vars))
        for p in polys:
            want = t_mul(want, T(p))
        assert got == want.poly


def test_divide_matches_oracle():
    for rng, vars in _cases(4):
        f = random_poly(rng, vars)
        g = random_poly(rng, vars, unit=True)
        assert S.divide(ps(f), ps(g)).truncate(CAP) == t_div(T(f), T(g)).poly


def test_inverse_matches_oracle():
    for rng, vars in _cases(5):
        g = random_poly(rng, vars, unit=True)
        assert S.inverse(ps(g)).truncate(CAP) == t_inverse(T(g)).poly


def test_exponentiate_matches_oracle():
    for rng, vars in _cases(6):
        n = rng.randint(-3, 5)
        f = random_poly(rng, vars, max_degree=3, unit=n < 0)
        assert S.exponentiate(ps(f), n).truncate(CAP) == t_pow(T(f), n).poly


def test_nested_lazy_expression_matches_oracle():
    for rng, vars in _cases(7):
        a, b = random_poly(rng, vars), random_poly(rng, vars)
        u = random_poly(rng, vars, unit=True)
        lazy = S.divide(S.mul_many([ps(a), ps(b) + ps(u)]), ps(u)) - ps(b)
        want = t_add(t_div(t_mul(T(a), t_add(T(b), T(u))), T(u)), T(-b))
        assert lazy.truncate(CAP) == want.poly


# identities from the benchmark families

def test_geometric_parts_are_binomial_expansions():
    q = S.inverse(ps(1 - x - y))
    for d in range(31):
        assert q.homogeneous_part(d) == (x + y) ** d


def test_geometric_series_constructor():
    g = S.geometric_series(V)
    assert g.truncate(12) == S.inverse(ps(1 - x - y)).truncate(12)
    with pytest.raises(EmptyVarSet):
        S.geometric_series(())


def test_sum_of_all_monomials():
    s = S.sum_of_all_monomials(V)
    for d in range(6):
        part = s.homogeneous_part(d)
        assert len(part) == d + 1 and all(c == 1 for _, c in part)


@pytest.mark.parametrize("f", [1 + x + y, 2 + Fraction(1, 3) * (x + y)])
def test_unit_law(f):
    fs = ps(f)
    assert S.mul_many([fs, S.inverse(fs)]).truncate(30) == 1


# m-ary versus binary

def test_m_ary_agrees_with_binary_folds():
    rng = random.Random(8)
    for _ in range(25):
        vars = rng.choice(VARSETS)
        polys = [random_poly(rng, vars, unit=True) for _ in range(rng.randint(2, 5))]
        series = [S.inverse(ps(p)) for p in polys]
        m_sum, m_prod = S.add_many(series), S.mul_many(series)
        b_sum, b_prod = series[0], series[0]
        for s in series[1:]:
            b_sum = S.add_many([b_sum, s])
            b_prod = S.mul_many([b_prod, s])
        for d in range(21):
            assert m_sum.homogeneous_part(d) == b_sum.homogeneous_part(d)
        for d in range(11):
            assert m_prod.homogeneous_part(d) == b_prod.homogeneous_part(d)


# laziness and caching

def _reachable(root):
    seen, stack = {}, [root]
    while stack:
        n = stack.pop()
        if id(n) not in seen:
            seen[id(n)] = n
            stack.extend(n.ancestors)
    return list(seen.values())


def _dag(depth=10):
    a, b = ps(1 + x), ps(1 - y + x * y)
    node = a
    for i in range(depth):
        if i % 3 == 0:
            node = S.add_many([node, b], [1, Fraction(1, 2)])
        elif i % 3 == 1:
            node = S.mul_many([node, a, b])
        else:
            node = S.divide(node, S.add_many([b, a]))
    return node


def test_construction_is_lazy_except_divisor_degree_zero():
    root = _dag()
    nodes = _reachable(root)
    assert len(nodes) > 10
    for n in nodes:
        assert n.calls <= 1
        if n.calls:
            assert n.precision == 0


def test_construction_without_division_performs_no_calls():
    a, b = ps(1 + x), ps(1 - y)
    node = a
    for i in range(10):
        node = S.add_many([node, b]) if i % 2 else S.mul_many([node, a])
    assert all(n.calls == 0 for n in _reachable(node))
    assert node.precision == -1


def test_each_degree_generated_once():
    root = _dag()
    nodes = _reachable(root)
    root.homogeneous_part(25)
    for n in nodes:
        assert n.calls <= 26
    before = [n.calls for n in nodes]
    root.homogeneous_part(25)
    root.truncate(25)
    assert [n.calls for n in nodes] == before


def test_cached_parts_are_homogeneous():
    root = _dag()
    root.update_precision(12)
    for n in _reachable(root):
        for d, part in enumerate(n.cached_parts()):
            assert part.is_homogeneous(d) or not part


def test_zero_skip_does_not_request_right_operand():
    calls = []

    def right(d):
        calls.append(d)
        return MultiPoly.zero(V)

    left = ps(x ** 3)
    prod = S.mul_many([left, S.from_generator(right, V)])
    prod.update_precision(4)
    # left parts 0..2 are zero, so only right parts 0..1 are ever needed
    assert max(calls) <= 1


def test_reentrant_request_is_rejected():
    box = {}

    def gen(s, d):
        return box["node"].homogeneous_part(d)

    node = S.PowerSeries(V, gen)
    box["node"] = node
    with pytest.raises(RuntimeError):
        node.homogeneous_part(0)


# constructors and errors

def test_from_generator_checks_homogeneity():
    bad = S.from_generator(lambda d: x + 1, V)
    with pytest.raises(GeneratorDegreeMismatch):
        bad.homogeneous_part(1)
    ok = S.from_generator(lambda d: x ** d, V)
    assert ok.truncate(3) == 1 + x + x ** 2 + x ** 3


def test_errors():
    with pytest.raises(NotInvertible):
        S.inverse(ps(x + y))
    with pytest.raises(LengthMismatch):
        S.add_many([ps(x)], [1, 2])
    with pytest.raises(EmptyList):
        S.add_many([])
    with pytest.raises(EmptyList):
        S.mul_many([])
    with pytest.raises(VarSetMismatch):
        S.add_many([ps(x), ps(MultiPoly.variable(("x",), "x"))])


def test_queries():
    f = ps(x ** 2 * y + 3 * x)
    assert S.order(f, 5) == S.Order(1)
    assert S.order(S.zero(V), 5) == S.ZeroThrough(5)
    assert f.get_coefficient((2, 1)) == 1
    assert f.get_coefficient({"x": 1}) == 3
    assert f.get_coefficient(x ** 2 * y) == 1
    assert S.precision(S.inverse(ps(1 + x))) == 0
    assert S.constant(V, 0).truncate(4) == 0


def test_operators():
    f, g = ps(1 + x), ps(1 - y)
    assert (f * g - g * f).truncate(5) == 0
    assert (f / f).truncate(6) == 1
    assert (1 / f).truncate(3) == 1 - x + x ** 2 - x ** 3
    assert (f ** 2 + x).truncate(3) == 1 + 3 * x + x ** 2
    assert (2 - f).truncate(2) == 1 - x


# rendering

def test_render_examples():
    assert S.render(S.inverse(ps(1 - x - y)), S.DisplayStyle(max_degree_shown=2)) == (
        "1 + x + y + x^2 + 2*x*y + y^2 + O(deg 3)"
    )
    one_x = MultiPoly.variable(("x",), "x")
    prod = S.mul_many([ps(1 + one_x), ps(1 - one_x)])
    assert S.render(prod, S.DisplayStyle(max_degree_shown=3)) == "1 - x^2 + O(deg 4)"
    assert S.render(ps(1 + x), S.DisplayStyle(max_degree_shown=3)) == "1 + x"
    assert S.render(ps(x ** 4), S.DisplayStyle(max_degree_shown=3)) == "0 + O(deg 4)"


def test_render_term_limit_and_label():
    q = S.inverse(ps(1 - x - y))
    assert S.render(q, S.DisplayStyle(max_terms=3, max_degree_shown=4)) == "1 + x + y + ... + O(deg 5)"
    style = S.DisplayStyle(max_degree_shown=1, show_label=True)
    assert S.render(q, style) == "1 + x + y + O(deg 2)  [= 1/(-x - y + 1)]"
