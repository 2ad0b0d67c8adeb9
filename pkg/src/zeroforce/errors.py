"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ZeroForcingError(Exception):
    """Base class for all errors raised by :mod:`zeroforce`."""


class InvalidOrderingError(ZeroForcingError, ValueError):
    """A vertex ordering is not a permutation, or not a perfect elimination ordering."""


class NotChordalError(ZeroForcingError, ValueError):
    """An operation requiring a chordal graph received a non-chordal one."""


class InvalidParameterError(ZeroForcingError, ValueError):
    """Generator or operation parameters are outside their valid range."""


class PreconditionError(ZeroForcingError, ValueError):
    """Input violates a documented precondition (not a cover, not a tree, ...)."""


class TraceInvalidError(ZeroForcingError):
    """A scripted force event (or search action) is illegal at its position.

    ``step`` is the 0-based index of the offending event.
    """

    def __init__(self, step: int, reason: str):
        super().__init__(f"step {step}: {reason}")
        self.step = step
        self.reason = reason


class CapExceededError(ZeroForcingError):
    """A brute-force oracle was asked to work above its configured size cap."""


class GraphParseError(ZeroForcingError, ValueError):
    """Malformed text input; ``line`` is 1-based (0 when unknown)."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line
