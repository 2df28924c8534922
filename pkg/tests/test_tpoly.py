"""Tests for Laurent polynomials, t-integers and Gaussian binomials."""

import math

import pytest
import sympy

from qt_screening.algebra.tpoly import (
    ONE,
    ZERO,
    T,
    TPoly,
    bar_t,
    divide_by_t_minus_1,
    gauss_binom,
    is_divisible_by_t_minus_1,
    t_integer,
)
from qt_screening.display.render import render_tpoly
from qt_screening.errors import NotDivisibleError

t = sympy.Symbol("t")


def as_sympy(p: TPoly) -> sympy.Expr:
    return sum((c * t**e for e, c in p.terms), sympy.Integer(0))


def random_tpoly(rng) -> TPoly:
    return TPoly((rng.randint(-4, 4), rng.randint(-3, 3)) for _ in range(rng.randint(0, 4)))


class TestTPoly:
    """Test arithmetic and canonical form."""

    def test_zero_coefficients_dropped(self):
        """Test that cancelled terms are not stored."""
        p = TPoly({0: 1, 2: 0}) + TPoly({0: -1})
        assert p == ZERO
        assert not p
        assert p.terms == ()

    def test_equality_with_int(self):
        assert TPoly.const(3) == 3
        assert ZERO == 0
        assert T != 1

    def test_degrees(self):
        p = TPoly({-2: 1, 3: -4})
        assert p.min_degree == -2
        assert p.max_degree == 3
        with pytest.raises(ValueError):
            ZERO.min_degree

    def test_shift_and_bar(self):
        p = TPoly({1: 2, -3: 1})
        assert p.shift(2) == TPoly({3: 2, -1: 1})
        assert p.bar() == TPoly({-1: 2, 3: 1})
        assert p.bar().bar() == p
        assert bar_t(TPoly({0: 1, 2: 1})) == TPoly({0: 1, -2: 1})

    def test_at_one(self):
        assert TPoly({1: 2, -3: 1, 0: -5}).at_one() == -2

    def test_coerce_rejects_bool(self):
        with pytest.raises(TypeError):
            TPoly.coerce(True)

    def test_arithmetic_matches_sympy(self, rng):
        """Test sums and products against sympy expansion."""
        for _ in range(50):
            p, q = random_tpoly(rng), random_tpoly(rng)
            assert sympy.expand(as_sympy(p * q) - as_sympy(p) * as_sympy(q)) == 0
            assert sympy.expand(as_sympy(p + q) - as_sympy(p) - as_sympy(q)) == 0
            assert sympy.expand(as_sympy(p - q) - as_sympy(p) + as_sympy(q)) == 0

    def test_int_scalars(self):
        assert 2 * T == TPoly({1: 2})
        assert T + 1 == TPoly({0: 1, 1: 1})
        assert 1 - T == TPoly({0: 1, 1: -1})


class TestTInteger:
    """Test the t-integers attached to exponents."""

    def test_values(self):
        assert t_integer(0) == ZERO
        assert t_integer(1) == ONE
        assert t_integer(3) == TPoly({0: 1, 2: 1, 4: 1})
        assert t_integer(-1) == TPoly({-2: -1})
        assert t_integer(-2) == TPoly({-2: -1, -4: -1})

    def test_classical_limit(self):
        for u in range(-6, 7):
            assert t_integer(u).at_one() == u

    def test_additive_with_shift(self):
        """Test [a + b] = [b] + t^(2b) [a] for all signs."""
        for a in range(-5, 6):
            for b in range(-5, 6):
                assert t_integer(a + b) == t_integer(b) + t_integer(a).shift(2 * b)


class TestGaussBinom:
    """Test symmetric Gaussian binomials."""

    def test_small_values(self):
        assert gauss_binom(0, 0) == ONE
        assert gauss_binom(2, 1) == TPoly({1: 1, -1: 1})
        assert gauss_binom(3, 1) == TPoly({2: 1, 0: 1, -2: 1})
        assert gauss_binom(4, 2) == TPoly({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})

    def test_outside_range_is_zero(self):
        assert gauss_binom(3, -1) == ZERO
        assert gauss_binom(3, 4) == ZERO

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            gauss_binom(-1, 0)

    def test_symmetric_and_bar_invariant(self):
        for n in range(10):
            for r in range(n + 1):
                assert gauss_binom(n, r) == gauss_binom(n, n - r)
                assert gauss_binom(n, r).bar() == gauss_binom(n, r)

    def test_classical_limit(self):
        for n in range(10):
            for r in range(n + 1):
                assert gauss_binom(n, r).at_one() == math.comb(n, r)

    def test_shifted_pascal(self):
        """Test the recursion used by the star-power expansion."""
        for p in range(1, 9):
            for r in range(0, p + 2):
                left = gauss_binom(p, r).shift(r * (p - r)) + gauss_binom(p, r - 1).shift(
                    (r - 1) * (p - r + 1) + 2 * p - 2 * r + 2
                )
                assert left == gauss_binom(p + 1, r).shift(r * (p + 1 - r))

    def test_unsymmetrized_form_matches_sympy(self):
        """Test t^(r(n-r)) [n, r] against the q-binomial with q = t^2."""
        q = t**2
        for n in range(7):
            for r in range(n + 1):
                num = sympy.prod([1 - q ** (n - j) for j in range(r)])
                den = sympy.prod([1 - q ** (j + 1) for j in range(r)])
                expected = sympy.expand(sympy.cancel(num / den))
                assert sympy.expand(as_sympy(gauss_binom(n, r).shift(r * (n - r))) - expected) == 0


class TestDivision:
    """Test division by (t - 1)."""

    def test_exact_division(self):
        assert divide_by_t_minus_1(TPoly({2: 1, 0: -1})) == TPoly({1: 1, 0: 1})
        assert divide_by_t_minus_1(ZERO) == ZERO

    def test_laurent_division(self, rng):
        t_minus_1 = TPoly({1: 1, 0: -1})
        for _ in range(30):
            q = random_tpoly(rng)
            assert divide_by_t_minus_1(q * t_minus_1) == q

    def test_not_divisible(self):
        p = TPoly({2: 1, 0: 1})
        assert not is_divisible_by_t_minus_1(p)
        with pytest.raises(NotDivisibleError):
            divide_by_t_minus_1(p)


def test_render_tpoly():
    """Test text rendering by descending degree."""
    assert render_tpoly(ZERO) == "0"
    assert render_tpoly(TPoly({2: 1, 0: 1})) == "t^2 + 1"
    assert render_tpoly(TPoly({-2: -1})) == "-t^-2"
    assert render_tpoly(TPoly({1: 3, -1: -2})) == "3t - 2t^-1"
