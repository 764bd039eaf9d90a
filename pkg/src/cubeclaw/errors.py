"""Exception types shared across the package."""

from __future__ import annotations


class InsufficientCardinalityError(ValueError):
    """A vertex set is too small for the requested extraction.

    Carries the bound so callers (and error messages) can name the
    required minimum explicitly.
    """

    def __init__(self, required: int, actual: int, dim: int):
        self.required = required
        self.actual = actual
        self.dim = dim
        super().__init__(
            f"need at least {required} vertices in a dimension-{dim} cube, got {actual}"
        )


class TheoremViolationError(RuntimeError):
    """Raised when a guaranteed witness search comes up empty.

    This must never fire; it exists as the loudest possible regression
    alarm, carrying the offending set for post-mortem analysis.
    """

    def __init__(self, message: str, dim: int, mask: int):
        self.dim = dim
        self.mask = mask
        super().__init__(f"{message} (dim={dim}, mask={mask:#x})")


class SetParseError(ValueError):
    """Malformed vertex-set text, with a line/column diagnostic."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc = f" ({loc})"
        super().__init__(f"{message}{loc}")
