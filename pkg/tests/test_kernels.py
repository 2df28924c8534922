"""Tests for kernel generators, decompositions, membership and star factorizations."""

import pytest

from qt_screening.algebra.cartan import a_inverse_monomial, a_monomial
from qt_screening.algebra.elements import ClassicalElement, HatElement, YElement
from qt_screening.algebra.kernels import (
    Flavor,
    alpha,
    decompose,
    e0,
    e0_prime,
    e_classical,
    e_hat,
    generator,
    in_kernel_module,
    in_kt,
    kt_witness,
    lemma7_sides,
    maximal_monomials,
    reconstruct,
    verify_prop4,
)
from qt_screening.algebra.monomials import HatMonomial, YMonomial
from qt_screening.algebra.screening import QuotientKind, screen
from qt_screening.algebra.tpoly import TPoly
from qt_screening.errors import CartanError, NonDominantError, NotInOrderError, RingMismatchError

W = HatMonomial.ww
V = HatMonomial.vv
Y = YMonomial.y


def a2_fundamental() -> YElement:
    """Y_{1,0} + Y_{1,2}^-1 Y_{2,1} + Y_{2,3}^-1."""
    return YElement({Y(1, 0): 1, Y(1, 2, -1) * Y(2, 1): 1, Y(2, 3, -1): 1})


class TestHatGenerators:
    """Test E_i(m) in the hat ring."""

    def test_fundamental(self, sl2):
        assert e_hat(sl2, 1, W(1, 0)) == HatElement({W(1, 0): 1, W(1, 0) * V(1, 1): 1})

    def test_square(self, sl2):
        m = W(1, 0, 2)
        assert e_hat(sl2, 1, m) == HatElement(
            {m: 1, m * V(1, 1): TPoly({0: 1, 2: 1}), m * V(1, 1, 2): 1}
        )

    def test_constant(self, sl2):
        assert e_hat(sl2, 1, HatMonomial()) == HatElement.scalar(1)

    def test_non_dominant(self, sl2):
        with pytest.raises(NonDominantError):
            e_hat(sl2, 1, V(1, 1))

    def test_killed_by_screening(self, b2, g2, make_sampler):
        """Test screen(hatF) vanishes on generators, non simply-laced data included."""
        for cd in (b2, g2):
            sampler = make_sampler(cd)
            for _ in range(5):
                i = sampler.node()
                m = sampler.dominant_hat(i)
                assert screen(cd, QuotientKind.HAT_F, i, e_hat(cd, i, m)) == 0


class TestYGenerators:
    """Test E_{0,i}(m) and its primed rescaling."""

    def test_e0_fundamental(self, sl2):
        assert e0(sl2, 1, Y(1, 0)) == YElement({Y(1, 0): 1, Y(1, 2, -1): 1})

    def test_e0_square(self, sl2):
        x = e0(sl2, 1, Y(1, 0, 2))
        assert x == YElement(
            {Y(1, 0, 2): 1, Y(1, 0) * Y(1, 2, -1): TPoly({0: 1, 2: 1}), Y(1, 2, -2): 1}
        )
        assert screen(sl2, QuotientKind.Y_F, 1, x) == 0

    def test_e0_prime_square(self, sl2):
        x = e0_prime(sl2, 1, Y(1, 0, 2))
        assert x == YElement(
            {Y(1, 0, 2): 1, Y(1, 0) * Y(1, 2, -1): TPoly({-1: 1, 1: 1}), Y(1, 2, -2): 1}
        )
        assert screen(sl2, QuotientKind.Y_F_PRIME, 1, x) == 0

    def test_e0_prime_fundamental_unchanged(self, sl2):
        assert e0_prime(sl2, 1, Y(1, 0)) == e0(sl2, 1, Y(1, 0))

    def test_classical(self, sl2):
        assert e_classical(sl2, 1, Y(1, 0, 2)) == ClassicalElement(
            {Y(1, 0, 2): 1, Y(1, 0) * Y(1, 2, -1): 2, Y(1, 2, -2): 1}
        )

    def test_non_dominant(self, sl2):
        with pytest.raises(NonDominantError):
            e0(sl2, 1, Y(1, 0, -1))

    def test_generator_ring_check(self, sl2):
        with pytest.raises(RingMismatchError):
            generator(sl2, 1, Y(1, 0), Flavor.HAT)
        with pytest.raises(RingMismatchError):
            generator(sl2, 1, W(1, 0), "y")


class TestAlpha:
    """Test the exponent alpha(m, M)."""

    def test_values(self, sl2):
        m = Y(1, 0, 2)
        lower = a_inverse_monomial(sl2, 1, 1)
        assert alpha(sl2, 1, m, m) == 0
        assert alpha(sl2, 1, m, m * lower) == 1
        assert alpha(sl2, 1, m, m * lower**2) == 0

    def test_above_is_rejected(self, sl2):
        m = Y(1, 0, 2)
        with pytest.raises(NotInOrderError):
            alpha(sl2, 1, m, m * a_monomial(sl2, 1, 1))

    def test_other_node_is_rejected(self, a2):
        m = Y(1, 0)
        with pytest.raises(NotInOrderError, match="off node"):
            alpha(a2, 1, m, m * a_inverse_monomial(a2, 2, 1))


class TestDecompose:
    """Test the split into the generator span and non-dominant monomials."""

    def test_generator_round_trip(self, sl2):
        dec = decompose(sl2, 1, e_hat(sl2, 1, W(1, 0)), Flavor.HAT)
        assert dec.dominant_part == {W(1, 0): 1}
        assert dec.remainder == 0
        assert dec.is_member

    def test_non_dominant_monomial(self, sl2):
        x = HatElement({V(1, 1): 1})
        dec = decompose(sl2, 1, x, "hat")
        assert dec.dominant_part == {}
        assert dec.remainder == x
        assert not dec.is_member

    def test_scalar_is_member(self, sl2):
        assert in_kernel_module(sl2, 1, HatElement.scalar(7), "hat")

    def test_perturbed_generator(self, sl2):
        x = e_hat(sl2, 1, W(1, 0)) + HatElement({V(1, 1): TPoly({1: 1, 0: -1})})
        assert not in_kernel_module(sl2, 1, x, Flavor.HAT)

    @pytest.mark.parametrize("flavor", ["hat", "y", "yprime", "classical"])
    def test_reconstruction(self, a2, b2, make_sampler, flavor):
        for cd in (a2, b2):
            sampler = make_sampler(cd)
            for _ in range(5):
                i = sampler.node()
                x = {
                    "hat": sampler.hat_element,
                    "y": sampler.y_element,
                    "yprime": sampler.y_element,
                    "classical": sampler.classical_element,
                }[flavor]()
                dec = decompose(cd, i, x, flavor)
                assert reconstruct(cd, dec) == x
                assert decompose(cd, i, reconstruct(cd, dec), flavor).dominant_part == dec.dominant_part

    def test_g2_overlapping_generators(self, g2):
        top, low = W(2, 0) * W(2, 2), W(2, 2)
        x = e_hat(g2, 2, top) + e_hat(g2, 2, low) + HatElement({V(2, 1): 1})
        before = HatElement(dict(x.terms()))
        dec = decompose(g2, 2, x, Flavor.HAT)
        assert x == before
        assert dec.dominant_part == {low: 1, top: 1}
        assert dec.remainder == HatElement({V(2, 1): 1})
        assert reconstruct(g2, dec) == x

    def test_sum_of_generators(self, a2):
        x = e0(a2, 1, Y(1, 0)).scale(TPoly({1: 3})) + e0(a2, 1, Y(1, 0, 2) * Y(2, 5))
        dec = decompose(a2, 1, x, Flavor.Y)
        assert dec.dominant_part == {Y(1, 0): TPoly({1: 3}), Y(1, 0, 2) * Y(2, 5): 1}
        assert dec.remainder == 0

    def test_ring_mismatch(self, sl2):
        with pytest.raises(RingMismatchError):
            decompose(sl2, 1, YElement({Y(1, 0): 1}), Flavor.HAT)


class TestIntersection:
    """Test membership in the intersection over all nodes."""

    def test_a2_fundamental(self, a2):
        x = a2_fundamental()
        assert maximal_monomials(a2, x) == [Y(1, 0)]
        assert kt_witness(a2, x) is None
        assert in_kt(a2, x)
        assert all(in_kernel_module(a2, i, x, "y") for i in a2.nodes)

    def test_sl2_fundamental(self, sl2):
        assert in_kt(sl2, e0(sl2, 1, Y(1, 0)), "yprime")

    def test_single_monomial(self, sl2):
        assert not in_kt(sl2, YElement({Y(1, 0): 1}))

    def test_scalar(self, a2):
        assert in_kt(a2, YElement.scalar(TPoly({2: 5})))

    def test_non_dominant_maximal_monomial(self, a2):
        x = YElement({Y(1, 0) * Y(2, 0, -1): 1})
        assert kt_witness(a2, x) == Y(1, 0) * Y(2, 0, -1)
        assert not in_kt(a2, x)

    def test_incomparable_monomials_both_maximal(self, b2, a2):
        x = YElement({YMonomial(): 1, Y(2, -1): 1})
        assert set(maximal_monomials(b2, x)) == {YMonomial(), Y(2, -1)}
        far = YElement({Y(1, 0): 1, Y(1, 30): 1})
        assert set(maximal_monomials(a2, far)) == {Y(1, 0), Y(1, 30)}

    def test_maximal_drops_lower_monomial(self, a2):
        top = Y(1, 0)
        x = YElement({top: 1, top * a_inverse_monomial(a2, 1, 1): 1, Y(2, 5): 1})
        assert set(maximal_monomials(a2, x)) == {top, Y(2, 5)}

    def test_hat_flavor_rejected(self, sl2):
        with pytest.raises(RingMismatchError):
            in_kt(sl2, YElement({Y(1, 0): 1}), "hat")


class TestStarFactorization:
    """Test the ordered star product against E_i(m)."""

    @pytest.mark.parametrize("power", [1, 2, 3, 4])
    def test_sl2_powers(self, sl2, power):
        result = verify_prop4(sl2, 1, W(1, 0, power))
        assert result.matches
        assert result.beta == 0

    @pytest.mark.parametrize("power", [0, 1, 2, 3, 4])
    def test_power_identity(self, sl2, power):
        left, right = lemma7_sides(sl2, 1, W(1, 0), 0, power)
        assert left == right

    def test_power_identity_a2(self, a2):
        left, right = lemma7_sides(a2, 2, W(2, 1) * W(1, 4), 1, 3)
        assert left == right

    def test_needs_simply_laced(self, b2):
        with pytest.raises(CartanError):
            verify_prop4(b2, 1, W(1, 0))
