"""Shared exception types.

The CLI maps these onto exit codes: MathDomainError and its subclasses exit
with 1, BudgetExceededError with 3 (argparse already uses 2 for usage errors).
"""


class MonodivError(Exception):
    """Base class for all library errors."""


class MathDomainError(MonodivError, ValueError):
    """Input lies outside an operation's mathematical domain."""


class SingularCurveError(MathDomainError):
    """Curve parameters with vanishing discriminant."""


class InfiniteValuationError(MathDomainError):
    """p-adic valuation of zero was requested."""


class ExactRootError(MathDomainError):
    """The development base divides the polynomial exactly (a_0 = 0)."""


class BudgetExceededError(MonodivError):
    """A configured time budget ran out before the computation finished."""
