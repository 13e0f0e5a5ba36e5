"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: parse problems exit 2, violated
mathematical preconditions exit 3, resource caps exit 4.
"""

from __future__ import annotations


class EqsingError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(EqsingError):
    """Operands disagree on the number of variables."""


class ZeroPolynomialError(EqsingError):
    """Operation undefined for the zero polynomial (e.g. leading term)."""


class ZeroIdealError(EqsingError):
    """Every supplied ideal generator is zero."""


class PolyParseError(EqsingError):
    """Germ text did not parse; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotACriticalPointError(EqsingError):
    """Germ has a nonzero linear part, so the origin is not critical."""


class NonIsolatedError(EqsingError):
    """The critical point is not isolated (infinite-dimensional quotient).

    `missing_variable` is the 0-based index of a variable with no pure
    power in the leading ideal, when that is how infinitude was detected.
    """

    def __init__(self, message: str, missing_variable: int | None = None):
        super().__init__(message)
        self.missing_variable = missing_variable


class NotInvariantError(EqsingError):
    """Polynomial is not invariant under the given action.

    `monomial` is an exponent vector of a failing term.
    """

    def __init__(self, message: str, monomial: tuple[int, ...] | None = None):
        super().__init__(message)
        self.monomial = monomial


class NotPrimeError(EqsingError):
    """Classification requested for a composite modulus."""


class ResourceLimitError(EqsingError):
    """A configured size or iteration cap was exceeded."""


class ConsistencyError(EqsingError):
    """An internal cross-check failed; indicates a bug, not bad input."""
