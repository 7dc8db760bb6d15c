"""
Exception hierarchy shared by every unidist package.
"""
from typing import Optional


class UnidistError(Exception):
    """Base class for all library errors."""


class InvalidInput(UnidistError, ValueError):
    """A precondition on an argument was violated."""


class ParseError(InvalidInput):
    """Malformed degree-sequence or edge-list text."""

    def __init__(self, message: str, position: Optional[int] = None, line: Optional[int] = None):
        self.position = position
        self.line = line
        where = ""
        if line is not None:
            where = f" (line {line})"
        elif position is not None:
            where = f" (position {position})"
        super().__init__(f"{message}{where}")


class NotUnigraph(UnidistError):
    """A component matched none of the indecomposable unigraph families."""

    def __init__(self, component: str = ""):
        self.component = component
        detail = f": component {component}" if component else ""
        super().__init__(f"not a unigraph{detail}")


class NotThreshold(UnidistError):
    """A compact component is neither a complete block nor an isolated block."""


class TooLarge(UnidistError):
    """The brute-force oracle was asked to handle more vertices than its cap."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"graph has {n} vertices, oracle cap is {cap}")


class InternalError(UnidistError, RuntimeError):
    """An internal invariant was breached."""
