"""Exception types raised by the engine and mapped to CLI exit codes."""


class FrameComplexError(Exception):
    """Base class for all engine errors."""


class DomainError(FrameComplexError, ValueError):
    """An argument is outside the domain of an operation (index range, degree, covalence)."""


class ParseError(FrameComplexError, ValueError):
    """Malformed expression or form document."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class VerificationError(FrameComplexError):
    """A checked identity or precondition did not hold.

    ``residual`` carries the nonzero object that should have vanished.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
