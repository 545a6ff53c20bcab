"""Exception types shared across the package."""


class SgchromError(Exception):
    """Base class for all package-specific errors."""


class ParseError(SgchromError):
    """Malformed signed-graph file content."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class BudgetExceededError(SgchromError):
    """A computation exceeded its configured work budget or size guard."""


class UncolorableError(SgchromError):
    """The graph admits no proper coloring for any number of colors.

    Happens exactly when some vertex carries a positive loop.
    """


class InterpolationError(SgchromError):
    """Samples are inconsistent with an integer polynomial of the stated degree."""


class ContractionError(SgchromError):
    """Attempt to contract a negative edge or a loop."""
