"""Exception types shared across the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Invalid argument for a graph operation (unknown edge, bad circle, ...)."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(GraphError):
    """An operation was called on a graph that violates its precondition."""


class CircleCapExceeded(RuntimeError):
    """Circle enumeration produced more circles than the configured cap."""

    def __init__(self, cap: int) -> None:
        self.cap = cap
        super().__init__(f"circle count exceeds cap of {cap}")


class InvariantViolation(RuntimeError):
    """The structural characterization disagreed with exhaustive enumeration.

    Never expected; raising it means the structural test (or the
    characterization behind it) is wrong for the offending input.
    """
