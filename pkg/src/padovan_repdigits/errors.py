"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the documented domain of an operation."""


class PrecisionExhausted(ArithmeticError):
    """A certified result could not be obtained at the maximum working precision."""


class DepthExhausted(LookupError):
    """A continued fraction expansion is not certified deep enough."""


class UnresolvedException(RuntimeError):
    """A reduction case has non-positive epsilon and no known explanation."""
