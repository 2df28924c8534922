"""Exact Laurent polynomials in t with integer coefficients.

Provides the scalar ring Z[t, t^-1] together with t-integers, symmetric Gaussian binomials,
the bar substitution t -> t^-1 and division by (t - 1).
"""

import logging
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from qt_screening.errors import NotDivisibleError

logger = logging.getLogger(__name__)

Scalar = Union[int, "TPoly"]


class TPoly:
    """Immutable Laurent polynomial sum c_e t^e with integer coefficients.

    Zero coefficients are never stored, so structural equality is polynomial equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, coeffs: Union[Mapping[int, int], Iterable[Tuple[int, int]], None] = None):
        acc: Dict[int, int] = {}
        if coeffs is not None:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for exp, c in items:
                acc[int(exp)] = acc.get(int(exp), 0) + int(c)
        self._terms: Tuple[Tuple[int, int], ...] = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = hash(self._terms)

    @classmethod
    def const(cls, c: int) -> "TPoly":
        return cls({0: c})

    @classmethod
    def t_power(cls, exp: int, coeff: int = 1) -> "TPoly":
        """Return coeff * t^exp."""
        return cls({exp: coeff})

    @classmethod
    def coerce(cls, value: Scalar) -> "TPoly":
        if isinstance(value, TPoly):
            return value
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot use {type(value).__name__} as a Laurent polynomial in t")
        return cls.const(value)

    @property
    def terms(self) -> Tuple[Tuple[int, int], ...]:
        """(exponent, coefficient) pairs sorted by exponent."""
        return self._terms

    def as_dict(self) -> Dict[int, int]:
        return dict(self._terms)

    def coefficient(self, exp: int) -> int:
        for e, c in self._terms:
            if e == exp:
                return c
        return 0

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[0][0]

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[-1][0]

    def is_monomial(self) -> bool:
        """True for c * t^e with a single term."""
        return len(self._terms) == 1

    def at_one(self) -> int:
        """Evaluate at t = 1."""
        return sum(c for _, c in self._terms)

    def shift(self, exp: int) -> "TPoly":
        """Multiply by t^exp."""
        if exp == 0:
            return self
        return TPoly((e + exp, c) for e, c in self._terms)

    def bar(self) -> "TPoly":
        """Substitute t -> t^-1."""
        return TPoly((-e, c) for e, c in self._terms)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TPoly):
            return self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self._terms == TPoly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __neg__(self) -> "TPoly":
        return TPoly((e, -c) for e, c in self._terms)

    def __add__(self, other: Scalar) -> "TPoly":
        try:
            rhs = TPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return TPoly(self._terms + rhs._terms)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "TPoly":
        try:
            rhs = TPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return TPoly(self._terms + tuple((e, -c) for e, c in rhs._terms))

    def __rsub__(self, other: Scalar) -> "TPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "TPoly":
        if isinstance(other, int) and not isinstance(other, bool):
            return TPoly((e, c * other) for e, c in self._terms)
        if not isinstance(other, TPoly):
            return NotImplemented
        acc: Dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return TPoly(acc)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"TPoly({dict(self._terms)!r})"

    def __str__(self) -> str:
        from qt_screening.display.render import render_tpoly

        return render_tpoly(self)


ZERO = TPoly()
ONE = TPoly.const(1)
T = TPoly.t_power(1)


def t_integer(u: int) -> TPoly:
    """The t-integer attached to an exponent u.

    For u >= 0 this is 1 + t^2 + ... + t^(2(u-1)) (zero when u = 0); for u < 0 it is
    -(t^-2 + t^-4 + ... + t^(2u)).
    """
    if u >= 0:
        return TPoly((2 * k, 1) for k in range(u))
    return TPoly((-2 * k, -1) for k in range(1, -u + 1))


@lru_cache(maxsize=None)
def gauss_binom(n: int, r: int) -> TPoly:
    """Symmetric Gaussian binomial [n, r]_t.

    Fixed by [n, 0] = [n, n] = 1 and [p+1, r] = t^-r [p, r] + t^(p+1-r) [p, r-1];
    zero when r lies outside 0..n.
    """
    if n < 0:
        raise ValueError(f"gauss_binom needs n >= 0, got {n}")
    if r < 0 or r > n:
        return ZERO
    if r == 0 or r == n:
        return ONE
    p = n - 1
    return gauss_binom(p, r).shift(-r) + gauss_binom(p, r - 1).shift(p + 1 - r)


def bar_t(p: TPoly) -> TPoly:
    """Substitute t -> t^-1."""
    return p.bar()


def divide_by_t_minus_1(p: TPoly) -> TPoly:
    """Return q with p = (t - 1) q.

    Raises:
        NotDivisibleError: if p(1) != 0
    """
    if not p:
        return ZERO
    if p.at_one() != 0:
        raise NotDivisibleError(f"{p} does not vanish at t = 1")
    # synthetic division from the top degree down
    remaining = p.as_dict()
    quotient: Dict[int, int] = {}
    for exp in range(p.max_degree, p.min_degree, -1):
        c = remaining.get(exp, 0)
        if c:
            quotient[exp - 1] = c
            remaining[exp - 1] = remaining.get(exp - 1, 0) + c
    return TPoly(quotient)


def is_divisible_by_t_minus_1(p: TPoly) -> bool:
    return p.at_one() == 0


__all__ = [
    "TPoly",
    "Scalar",
    "ZERO",
    "ONE",
    "T",
    "t_integer",
    "gauss_binom",
    "bar_t",
    "divide_by_t_minus_1",
    "is_divisible_by_t_minus_1",
]
