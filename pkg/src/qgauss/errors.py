"""Exception types shared across the package."""


class QGaussError(ValueError):
    """Base class for input and contract violations."""


class CapExceededError(QGaussError):
    """An enumeration would exceed its configured size cap."""

    def __init__(self, message, reached=None):
        super().__init__(message)
        self.reached = reached


class PosetError(QGaussError):
    """Malformed poset description: cycle, non-cover pair, bad syntax."""


class CheckError(QGaussError):
    """Unknown verification check or invalid check parameters."""
