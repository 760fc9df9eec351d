"""Lazy multivariate power series over the rationals.

The main entry points are :mod:`mpseries.series` for power series,
:mod:`mpseries.upops` for polynomials over power series (Weierstrass
preparation, Taylor shift, Hensel factorization) and
:mod:`mpseries.parser` for reading polynomials from text.
"""
from .errors import (
    CapMismatch,
    EmptyList,
    EmptyVarSet,
    GeneratorDegreeMismatch,
    IndexOutOfRange,
    LeadingCoefficientNotUnit,
    LengthMismatch,
    NotInvertible,
    NotPrepared,
    ParseError,
    RootsNotRational,
    SeriesError,
    UnknownSuite,
    UnknownVariable,
    VariableClash,
    VarSetMismatch,
)
from .parser import parse, parse_polynomial
from .poly import MultiPoly
from .series import (
    DisplayStyle,
    PowerSeries,
    add_many,
    divide,
    exponentiate,
    from_generator,
    from_polynomial,
    geometric_series,
    inverse,
    mul_many,
    negate,
    render,
    subtract,
)
from .upops import (
    FactorizationResult,
    HenselFactor,
    Upops,
    evaluate_at_origin,
    hensel_factorize,
    render_upops,
    taylor_shift,
    upops_from_polynomial,
    weierstrass_preparation,
)

__version__ = "0.1.0"
