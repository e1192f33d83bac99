"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class NotInvertibleError(DomainError, ZeroDivisionError):
    """Raised when inverting zero (in F_p, F_q, or a polynomial ring)."""


class CapExceededError(DomainError):
    """An enumeration or search would exceed its configured size cap."""
