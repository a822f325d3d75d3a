"""
Error types shared across the toolkit.

Bad input raises a ValueError subclass; two computations that must agree
but do not raise ConsistencyError.
"""


class GraphError(ValueError):
    """Invalid vertex, edge or graph for the requested operation."""

    def __init__(self, message: str, pair: tuple | None = None, vertex: int | None = None):
        super().__init__(message)
        self.pair = pair
        self.vertex = vertex


class GraphFormatError(GraphError):
    """graph6 or edge-list text that cannot be parsed."""

    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        elif line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
        self.offset = offset
        self.line = line


class EdgelessGraphError(GraphError):
    """The conjecture only speaks about graphs with at least one edge."""

    def __init__(self, message: str = "conjecture requires at least one edge"):
        super().__init__(message)


class ConstructionError(ValueError):
    """One or more named preconditions of a construction failed."""

    def __init__(self, message: str, failed_checks: list[str] | None = None):
        self.failed_checks = list(failed_checks or [])
        if self.failed_checks:
            message = f"{message}: {', '.join(self.failed_checks)}"
        super().__init__(message)


class CatalogError(ValueError):
    """Unknown catalog name."""


class CatalogChecksumError(RuntimeError):
    """A catalog entry failed its load-time certification."""


class ConsistencyError(RuntimeError):
    """Two independent computations disagreed."""
