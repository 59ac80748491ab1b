"""Exception types raised by the library."""


class DomainError(ValueError):
    """Quantum numbers or arguments outside their allowed range."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (wrong construction, broken checksum)."""


class DivergentIntegralError(ValueError):
    """The requested integral does not converge."""


class UnsupportedIntegrandError(ValueError):
    """Integrand falls outside the exactly integrable class."""
