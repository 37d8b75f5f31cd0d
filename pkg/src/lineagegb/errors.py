"""Exception types shared across the package."""


class RingMismatchError(ValueError):
    """Operands belong to different rings or carry malformed exponent vectors."""


class ZeroPolynomialError(ValueError):
    """A nonzero polynomial was required."""


class DivisibilityError(ValueError):
    """Monomial quotient requested for a non-dividing pair."""


class ParseError(ValueError):
    """Rejected input text; carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
