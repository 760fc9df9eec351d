"""Exception types raised by the library."""


class SeriesError(Exception):
    """Base class for every error raised by mpseries."""


class VarSetMismatch(SeriesError, ValueError):
    pass


class EmptyVarSet(SeriesError, ValueError):
    pass


class LengthMismatch(SeriesError, ValueError):
    pass


class EmptyList(SeriesError, ValueError):
    pass


class GeneratorDegreeMismatch(SeriesError, ValueError):
    """A user generator returned something that is not homogeneous of the requested degree."""


class NotInvertible(SeriesError, ArithmeticError):
    """The divisor has a zero constant term."""


class VariableClash(SeriesError, ValueError):
    pass


class NotPrepared(SeriesError, ArithmeticError):
    """No coefficient of the input is a unit, so Weierstrass preparation does not apply."""


class LeadingCoefficientNotUnit(SeriesError, ArithmeticError):
    pass


class RootsNotRational(SeriesError, ArithmeticError):
    """The polynomial at the origin does not split into rational linear factors.

    ``residual`` holds the monic factor left after removing all rational roots.
    """

    def __init__(self, residual, message=None):
        self.residual = residual
        super().__init__(message or f"no rational splitting; residual {residual}")


class IndexOutOfRange(SeriesError, IndexError):
    pass


class UnknownVariable(SeriesError, ValueError):
    pass


class CapMismatch(SeriesError, ValueError):
    pass


class UnknownSuite(SeriesError, ValueError):
    pass


class ParseError(SeriesError, ValueError):
    """Raised by the expression parser.

    ``offset`` is a byte offset into the UTF-8 encoded input and ``expected``
    is the set of tokens that would have been accepted there.
    """

    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = f" (expected one of: {', '.join(sorted(self.expected))})" if self.expected else ""
        super().__init__(f"{message} at byte {offset}{detail}")
