"""Exception hierarchy shared by every module."""


class BifixError(Exception):
    """Base class for all errors raised by bifixlab."""


class InputError(BifixError, ValueError):
    """An argument violates the documented precondition."""


class ParseError(InputError):
    """Malformed automaton text. ``line`` is 1-based, or None if unknown."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(BifixError, ValueError):
    """The requested quantity is undefined for this input (e.g. an empty atom)."""


class ResourceError(BifixError, RuntimeError):
    """A computation would exceed a configured size cap."""


class GenerationError(BifixError, RuntimeError):
    """Random generation failed to produce a valid instance."""
