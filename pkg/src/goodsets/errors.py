"""Exception types for the goodsets package.

Every error raised on purpose by this package derives from GoodSetError, so
callers can catch one type at the boundary. The concrete classes map one to
one onto the distinct failure conditions of the public operations.
"""

from __future__ import annotations


class GoodSetError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(GoodSetError):
    """A point has the wrong number of coordinates, or the dimension is < 2."""


class DuplicatePointError(GoodSetError):
    """The same point occurs twice in a point set."""


class EmptySymbolError(GoodSetError):
    """A coordinate symbol is empty or contains whitespace."""


class AxisOutOfRangeError(GoodSetError):
    """An axis index lies outside 1..dimension."""


class ShapeMismatchError(GoodSetError):
    """Matrix/vector dimensions do not line up for the requested operation."""


class NotSquareError(GoodSetError):
    """Inversion was requested for a non-square matrix."""


class EmptySetError(GoodSetError):
    """The operation is undefined on the empty point set."""


class NotGoodError(GoodSetError):
    """The operation requires a good point set and the input is not good."""


class UnknownCoordinateError(GoodSetError):
    """A coordinate label does not occur in the point set."""


class NotABoundaryError(GoodSetError):
    """The given coordinate set is not a boundary of the point set."""


class MissingBoundaryValueError(GoodSetError):
    """A boundary coordinate has no prescribed value (or a value is spurious)."""


class PointNotInSetError(GoodSetError):
    """A requested endpoint is not an element of the point set."""


class SetTooLargeError(GoodSetError):
    """The point set exceeds the enumeration cap for exhaustive search."""


class NegativeIndexError(GoodSetError):
    """A family index must be non-negative."""


class FamilyTooSmallError(GoodSetError):
    """The family instance is too small for the requested construction."""


class VerificationFailedError(GoodSetError):
    """A verification check found a counterexample to the claimed property.

    Carries the machine-readable report of the failed check so callers can
    surface the witness.
    """

    def __init__(self, check: str, details: dict[str, object]):
        self.check = check
        self.details = dict(details)
        super().__init__(f"verification failed: {check}")


class ParseError(GoodSetError):
    """A document does not conform to the expected JSON shape."""
