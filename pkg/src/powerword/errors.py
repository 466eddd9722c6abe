"""Exception types shared across the package."""

__all__ = [
    "HypothesisViolation",
    "LimitError",
    "ScanLimitReached",
    "SearchBudgetExceeded",
]


class LimitError(RuntimeError):
    """A configured search or resource budget was exhausted."""


class SearchBudgetExceeded(LimitError):
    """An exhaustive search would retain more states than its node budget.

    Raised instead of returning a possibly wrong answer; the input is
    beyond the scale the search is configured for.
    """


class ScanLimitReached(LimitError):
    """A scan reached its exponent limit before finding what was asked for."""


class HypothesisViolation(RuntimeError):
    """The inputs violate a precondition the requested result depends on,
    e.g. asking for leading-digit exponents of a multiplicatively dependent
    pair of bases, or equivalence constants for an independent one."""
