"""Exception hierarchy.

Every failure that means "these numbers cannot belong to a discriminant
curve" derives from :class:`InvariantError`; the CLI maps those to exit
status 2 and prints the class name.
"""


class InvariantError(ValueError):
    """Base class for geometrically impossible or inconsistent data."""


class NegativeNodes(InvariantError):
    pass


class NegativeCusps(InvariantError):
    pass


class InconsistentDual(InvariantError):
    pass


class DegenerateDenominator(InvariantError):
    pass


class DenominatorNotPositive(InvariantError):
    pass


class NonIntegralChi(InvariantError):
    pass


class GenusViolation(InvariantError):
    pass


class HodgeBoundViolation(InvariantError):
    pass


class NotCanonicalShape(InvariantError):
    pass


class NoThresholdFound(InvariantError):
    pass


class DomainError(InvariantError):
    """Parameters outside the documented domain of an operation."""


class IndexOutOfRange(IndexError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class PresentationError(ValueError):
    """Malformed presentation file or word."""
