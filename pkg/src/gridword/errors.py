"""Exception types shared across the package."""


class GridWordError(Exception):
    """Base class for all gridword errors."""


class DimensionError(GridWordError):
    """Raised when dimensions are invalid or do not match."""


class ParseError(GridWordError):
    """Raised on malformed grid text; carries a 1-based position."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(message)
        self.line = line
        self.col = col

    def __str__(self) -> str:
        base = super().__str__()
        if self.line:
            if self.col:
                return f"line {self.line}, col {self.col}: {base}"
            return f"line {self.line}: {base}"
        return base


class CapacityError(GridWordError):
    """Raised when a request exceeds a configured resource guard."""


class ConstructionError(GridWordError):
    """A generated witness failed re-verification (internal bug sentinel)."""


class PartialResultError(GridWordError):
    """An enumeration hit its cap; carries the lower bound found so far."""

    def __init__(self, message: str, lower_bound: int):
        super().__init__(message)
        self.lower_bound = lower_bound
