"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates a documented precondition (zero where nonzero is
    required, degenerate matrix, composite modulus, wrong degree, ...)."""


class EffortExceededError(DomainError):
    """Factorization gave up within the configured effort budget."""


class InternalError(RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""
