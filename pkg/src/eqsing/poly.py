"""Exact multivariate polynomial arithmetic with a local monomial order.

Polynomials are sparse maps from exponent vectors (tuples of nonnegative
ints, one entry per variable) to nonzero `Fraction` coefficients.  All
arithmetic is exact; nothing in this package ever touches floating point
when manipulating polynomials.

The only monomial order used is the negative-degree reverse lexicographic
order: lower total degree wins, ties broken reverse-lexicographically.
Under it the constant monomial is the unique maximum, which is what makes
the order local (suitable for germs at the origin).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Union

from .errors import DimensionMismatchError, ResourceLimitError, ZeroPolynomialError

Exponent = tuple[int, ...]
Coefficient = Union[int, Fraction]


@dataclass(frozen=True)
class LocalOrder:
    """Negative-degree reverse lexicographic order on monomials.

    exponent a beats exponent b iff deg(a) < deg(b), or the degrees tie
    and the last nonzero entry of a-b is negative.  `key` turns that rule
    into a sort key: the order-largest monomial has the largest key.
    """

    nvars: int

    def key(self, exponent: Exponent) -> tuple:
        return (-sum(exponent), tuple(-e for e in reversed(exponent)))

    def greater(self, a: Exponent, b: Exponent) -> bool:
        return self.key(a) > self.key(b)


class Polynomial:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Coefficient] | None = None):
        if nvars < 1:
            raise ValueError("a polynomial needs at least one variable")
        clean: dict[Exponent, Fraction] = {}
        for exponent, coeff in (terms or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != nvars:
                raise DimensionMismatchError(
                    f"exponent {exponent} has length {len(exponent)}, expected {nvars}"
                )
            if any(e < 0 for e in exponent):
                raise ValueError(f"negative exponent in {exponent}")
            coeff = Fraction(coeff)
            if coeff:
                clean[exponent] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Coefficient) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        """The polynomial x_index (0-based index)."""
        if not 0 <= index < nvars:
            raise IndexError(f"variable index {index} out of range for {nvars} variables")
        exponent = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {exponent: 1})

    @classmethod
    def monomial(cls, nvars: int, exponent: Exponent, coeff: Coefficient = 1) -> "Polynomial":
        return cls(nvars, {tuple(exponent): coeff})

    # -- ring structure ----------------------------------------------------

    def _check_same_space(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatchError(
                f"operands live in {self.nvars} and {other.nvars} variables"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same_space(other)
        out = dict(self.terms)
        for exponent, coeff in other.terms.items():
            out[exponent] = out.get(exponent, Fraction(0)) + coeff
        return Polynomial(self.nvars, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same_space(other)
        out = dict(self.terms)
        for exponent, coeff in other.terms.items():
            out[exponent] = out.get(exponent, Fraction(0)) - coeff
        return Polynomial(self.nvars, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: Union["Polynomial", Coefficient]) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same_space(other)
        out: dict[Exponent, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, Fraction(0)) + ca * cb
        return Polynomial(self.nvars, out)

    def __rmul__(self, other: Coefficient) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, power: int) -> "Polynomial":
        if power < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base if power > 1 else base
            power >>= 1
        return result

    def scale(self, factor: Coefficient) -> "Polynomial":
        factor = Fraction(factor)
        return Polynomial(self.nvars, {e: c * factor for e, c in self.terms.items()})

    def shift(self, exponent: Exponent) -> "Polynomial":
        """Multiply by the monomial x^exponent."""
        return Polynomial(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exponent)): c for e, c in self.terms.items()},
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self.terms.items())

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return min(sum(e) for e in self.terms)

    def has_linear_part(self) -> bool:
        return any(sum(e) == 1 for e in self.terms)

    def two_jet_is_zero(self) -> bool:
        """True when no term of degree 1 or 2 is present (constants ignored)."""
        return all(sum(e) == 0 or sum(e) >= 3 for e in self.terms)

    # -- calculus ----------------------------------------------------------

    def diff(self, index: int) -> "Polynomial":
        """Formal partial derivative with respect to x_index (0-based)."""
        if not 0 <= index < self.nvars:
            raise IndexError(f"variable index {index} out of range for {self.nvars} variables")
        out: dict[Exponent, Fraction] = {}
        for exponent, coeff in self.terms.items():
            k = exponent[index]
            if k:
                e = exponent[:index] + (k - 1,) + exponent[index + 1:]
                out[e] = out.get(e, Fraction(0)) + coeff * k
        return Polynomial(self.nvars, out)

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {format_polynomial(self)!r})"

    def __str__(self) -> str:
        return format_polynomial(self)


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def partial_derivative(p: Polynomial, index: int) -> Polynomial:
    return p.diff(index)


def jacobian_ideal(f: Polynomial) -> list[Polynomial]:
    """All first partials of f, zero entries kept (they flag degeneracy)."""
    return [f.diff(i) for i in range(f.nvars)]


def leading_term(p: Polynomial, order: LocalOrder) -> tuple[Exponent, Fraction]:
    """The order-maximal term of p."""
    if p.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no leading term")
    exponent = max(p.terms, key=order.key)
    return exponent, p.terms[exponent]


def hessian_matrix(f: Polynomial) -> list[list[Polynomial]]:
    n = f.nvars
    firsts = [f.diff(i) for i in range(n)]
    rows: list[list[Polynomial]] = [[None] * n for _ in range(n)]  # type: ignore[list-item]
    for i in range(n):
        for j in range(i, n):
            entry = firsts[i].diff(j)
            rows[i][j] = entry
            rows[j][i] = entry
    return rows


def hessian_det(f: Polynomial, max_vars: int = 8) -> Polynomial:
    """Determinant of the Hessian matrix, by cofactor expansion.

    Minors are memoized on their column set; rows are always consumed
    top-down, so the row set is implied by len(cols).  Cost is O(2^n)
    polynomial multiplications, hence the `max_vars` cap.
    """
    n = f.nvars
    if n > max_vars:
        raise ResourceLimitError(
            f"Hessian determinant capped at {max_vars} variables (got {n})"
        )
    matrix = hessian_matrix(f)
    cache: dict[tuple[int, ...], Polynomial] = {}

    def minor(cols: tuple[int, ...]) -> Polynomial:
        if cols in cache:
            return cache[cols]
        row = n - len(cols)
        if len(cols) == 1:
            result = matrix[row][cols[0]]
        else:
            result = Polynomial.zero(n)
            for k, col in enumerate(cols):
                entry = matrix[row][col]
                if entry.is_zero:
                    continue
                sub = minor(cols[:k] + cols[k + 1:])
                piece = entry * sub
                result = result + piece if k % 2 == 0 else result - piece
        cache[cols] = result
        return result

    return minor(tuple(range(n)))


def format_polynomial(p: Polynomial) -> str:
    """Render in the CLI grammar (x1^2*x2 + ...), local-order term order."""
    if p.is_zero:
        return "0"
    order = LocalOrder(p.nvars)
    parts: list[str] = []
    for exponent in sorted(p.terms, key=order.key, reverse=True):
        coeff = p.terms[exponent]
        factors = [
            f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
            for i, e in enumerate(exponent)
            if e
        ]
        magnitude = abs(coeff)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(magnitude)] + factors)
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts)
