"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class AlphaForestError(Exception):
    """Base class for all package errors."""


class ParameterError(AlphaForestError, ValueError):
    """A parameter violates a documented constraint."""


class CapacityError(AlphaForestError):
    """A size limit (vertex cap, enumeration cap, canonical cap) was exceeded."""


class NumericError(AlphaForestError, ArithmeticError):
    """A numerical routine failed to converge or left its valid domain."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class Graph6Error(AlphaForestError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.message = message
        self.offset = offset


class PreconditionError(ParameterError):
    """An input violates an operation's precondition (e.g. a non-unit vector)."""
