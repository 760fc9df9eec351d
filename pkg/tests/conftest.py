import random
from fractions import Fraction

import pytest

from mpseries.poly import MultiPoly

VARSETS = [("x",), ("x", "y"), ("x", "y", "z")]


def random_fraction(rng, num=5, den=4):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_poly(rng, vars, max_degree=4, max_terms=4, unit=False):
    """A sparse random polynomial; ``unit`` forces a nonzero constant term."""
    terms = {}
    for _ in range(rng.randint(0 if not unit else 1, max_terms)):
        d = rng.randint(0, max_degree)
        e = [0] * len(vars)
        for _ in range(d):
            e[rng.randrange(len(vars))] += 1
        terms[tuple(e)] = terms.get(tuple(e), 0) + random_fraction(rng)
    if unit:
        c = random_fraction(rng)
        terms[(0,) * len(vars)] = c if c else Fraction(1)
    return MultiPoly(vars, terms)


@pytest.fixture
def rng():
    return random.Random(20240611)
