"""Exception hierarchy for qt_screening.

Library code raises these; only the command-line front end turns them into exit codes.
"""

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from qt_screening.algebra.lattice import Window


class QtScreeningError(Exception):
    """Base class for all errors raised by qt_screening."""


class CartanError(QtScreeningError, ValueError):
    """Invalid Cartan datum, unknown type name, or node outside 1..n."""


class BicharacterError(QtScreeningError, ValueError):
    """Bicharacter used outside its domain (e.g. nakajima on a non simply-laced datum)."""


class NonDominantError(QtScreeningError, ValueError):
    """A kernel generator was requested for a monomial that is not i-dominant."""


class NotInOrderError(QtScreeningError, ValueError):
    """M is not of the form m * prod A_{i,a}^{-r_a} with r_a >= 0."""


class RingMismatchError(QtScreeningError, ValueError):
    """Element, ring tag and quotient kind do not belong together."""


class ExpressionParseError(QtScreeningError, ValueError):
    """Text expression does not parse in the element grammar."""


class NotDivisibleError(QtScreeningError, ArithmeticError):
    """Laurent polynomial is not divisible by (t - 1)."""


class WindowTooSmallError(QtScreeningError):
    """Lattice window cannot hold every candidate A-support of a computation.

    Attributes:
        required: Smallest window known to be needed
    """

    def __init__(self, message: str, required: Optional["Window"] = None):
        super().__init__(message)
        self.required = required


__all__ = [
    "QtScreeningError",
    "CartanError",
    "BicharacterError",
    "NonDominantError",
    "NotInOrderError",
    "RingMismatchError",
    "ExpressionParseError",
    "NotDivisibleError",
    "WindowTooSmallError",
]
