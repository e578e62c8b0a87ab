"""Exception types shared across the package.

The CLI maps these onto exit codes, so every failure mode that can
reach a user has a dedicated class here.
"""


class GermImageError(Exception):
    """Base class for all package errors."""


class FieldMismatch(GermImageError):
    """Two distinct extension fields met in one arithmetic operation."""


class InvalidDivisor(GermImageError):
    """A multiplicity query was made against a constant polynomial."""


class ZeroPolynomial(GermImageError):
    """An operation that needs a nonzero polynomial received zero."""


class UnsupportedFactorization(GermImageError):
    """Local factorization fell outside the supported strategy.

    Carries the unfactored residual polynomial in ``residual``.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class UnsupportedCoefficientField(GermImageError):
    """A coefficient tower (or uncertifiable extension) was required.

    ``minpoly`` holds the offending univariate polynomial when known.
    """

    def __init__(self, message, minpoly=None):
        super().__init__(message)
        self.minpoly = minpoly


class PrecisionExhausted(GermImageError):
    """A series decision could not be made within the precision cap."""


class DegenerateComparison(GermImageError):
    """Proportionality query on two identically-zero series."""


class InvalidElimination(GermImageError):
    """Resultant elimination variable absent from both operands."""


class BudgetExceeded(GermImageError):
    """The Groebner pair budget was exhausted."""


class InternalDisagreement(GermImageError):
    """Two independent computation routes produced different answers.

    Never resolved silently: this always aborts the run.
    """


class OrderMonotonicityViolation(GermImageError):
    """A blow-up step increased a branch order, contradicting theory."""


class DepthExceeded(GermImageError):
    """The blow-up recursion ran past the configured depth bound."""


class InvalidTree(GermImageError):
    """A renderer or query received a malformed tree."""


class ParseError(GermImageError):
    """Expression syntax error; ``column`` is 1-based."""

    def __init__(self, message, column):
        super().__init__(f"{message} at column {column}")
        self.column = column
