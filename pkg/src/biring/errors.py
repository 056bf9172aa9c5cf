"""Exception hierarchy shared by every module."""


class BiringError(Exception):
    """Base class for all library errors."""


class ZeroDenominator(BiringError, ZeroDivisionError):
    pass


class DivisionByZero(BiringError, ZeroDivisionError):
    pass


class InvalidDimension(BiringError, ValueError):
    pass


class DimensionMismatch(BiringError, ValueError):
    pass


class NonSquare(BiringError, ValueError):
    pass


class IndexOutOfBounds(BiringError, IndexError):
    pass


class EmptyMinor(BiringError, ValueError):
    pass


class SizeLimit(BiringError, ValueError):
    pass


class ZeroEntry(BiringError, ZeroDivisionError):
    """Raised by the Hadamard inverse; ``position`` is the 1-based (row, col)."""

    def __init__(self, position):
        self.position = position
        super().__init__(f"zero entry at row {position[0]} col {position[1]}")


class NotInvertible(BiringError, ArithmeticError):
    """A matrix has no inverse for the requested product.

    ``witness`` names the sub-problem that failed (a pivot column, a
    quasideterminant cell, or a post-check), for diagnostics.
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class ParseError(BiringError, ValueError):
    """Malformed input. ``locus`` is a human readable location string."""

    def __init__(self, message, locus=None):
        self.locus = locus
        super().__init__(f"{locus}: {message}" if locus else message)


class RingMismatch(ParseError):
    pass


class UnknownCommand(BiringError, ValueError):
    pass
