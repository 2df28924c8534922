"""Tests for weights, bicharacters, projections, involutions and the A-order."""

import pytest

from qt_screening.algebra.cartan import a_inverse_monomial, load_cartan
from qt_screening.algebra.elements import ClassicalElement, HatElement, YElement
from qt_screening.algebra.lattice import SpectralIndex, Window
from qt_screening.algebra.monomials import HatMonomial, YMonomial
from qt_screening.algebra.rings import (
    Bicharacter,
    Relation,
    a_product,
    bar_hat,
    bar_y,
    d_eval,
    d_eval_alternate,
    hat_pi_d,
    is_all_dominant,
    is_dominant,
    order_le,
    pi_node,
    pi_t,
    pi_tilde_monomial,
    pi_tilde_t,
    star_mul,
    star_power,
    u_of_hat,
    u_of_y,
    u_profile,
    wt_i,
)
from qt_screening.algebra.tpoly import ONE, TPoly
from qt_screening.errors import BicharacterError, WindowTooSmallError

W = HatMonomial.ww
V = HatMonomial.vv


def y(*factors) -> YMonomial:
    return YMonomial.from_mapping({(i, k): e for i, k, e in factors})


class TestWeights:
    """Test u_{i,a} on hat monomials."""

    def test_sl2(self, sl2):
        assert u_profile(sl2, W(1, 0), 1) == {0: 1}
        assert u_profile(sl2, V(1, 1), 1) == {0: -1, 2: -1}
        assert u_profile(sl2, W(1, 0) * V(1, 1), 1) == {2: -1}

    def test_b2_cross_terms(self, b2):
        """Test cross terms are indexed by C_ij."""
        k = 4
        assert u_of_hat(b2, V(2, k), 1, k - 2) == 0
        assert u_of_hat(b2, V(2, k), 1, k) == 1
        assert u_of_hat(b2, V(1, k), 2, k + 1) == 1
        assert u_of_hat(b2, V(1, k), 2, k - 1) == 1
        assert u_of_hat(b2, V(1, k), 1, k + 2) == -1

    def test_matches_projection(self, a2, rng):
        """Test u agrees with the exponents of the projected monomial."""
        for _ in range(20):
            m = HatMonomial.from_mappings(
                v={(rng.randint(1, 2), rng.randint(-3, 3)): rng.randint(1, 2)},
                w={(rng.randint(1, 2), rng.randint(-3, 3)): rng.randint(1, 2)},
            )
            image = pi_tilde_monomial(a2, m)
            for i in a2.nodes:
                assert u_profile(a2, m, i) == image.node_profile(i)

    def test_dominance(self, a2):
        assert is_dominant(a2, W(1, 0), 1)
        assert not is_dominant(a2, V(1, 1), 1)
        assert is_dominant(a2, V(1, 1), 2)
        assert not is_all_dominant(a2, y((1, 2, -1), (2, 1, 1)))
        assert is_all_dominant(a2, y((1, 0, 1), (2, 3, 2)))

    def test_y_exponents(self):
        m = y((1, 0, 2), (1, 4, -1))
        assert u_of_y(m, 1, 4) == -1
        assert u_of_y(m, 2, 0) == 0

    def test_weight(self, a2):
        assert wt_i(a2, y((1, 0, 2), (1, 4, -1), (2, 0, 5)), 1) == 1
        assert wt_i(a2, W(1, 0) * V(1, 1), 1) == -1


class TestBicharacter:
    """Test the pairings d."""

    def test_parse(self):
        assert Bicharacter.parse("zero") == Bicharacter.zero()
        assert Bicharacter.parse("Nakajima") == Bicharacter.nakajima()
        assert Bicharacter.parse("node(2)") == Bicharacter.at_node(2)
        assert str(Bicharacter.at_node(2)) == "node(2)"
        with pytest.raises(BicharacterError):
            Bicharacter.parse("node(x)")
        with pytest.raises(BicharacterError):
            Bicharacter.parse("other")

    def test_node_needs_node(self):
        with pytest.raises(BicharacterError):
            Bicharacter("node")

    def test_nakajima_rejected_off_ade(self, b2):
        with pytest.raises(BicharacterError, match="simply-laced"):
            d_eval(b2, Bicharacter.nakajima(), W(1, 0), V(1, 1))

    def test_node_outside_range(self, a2):
        with pytest.raises(BicharacterError):
            d_eval(a2, Bicharacter.at_node(3), W(1, 0), V(1, 1))

    def test_zero_pairing(self, b2):
        assert d_eval(b2, Bicharacter.zero(), W(1, 0), V(1, 2)) == 0

    def test_nakajima_v_pairing(self, sl2):
        """Test d(V_{i,k+1}, m) = u_{i,k}(m) and d(m, V_{i,k+1}) = u_{i,k+2}(m)."""
        b = Bicharacter.nakajima()
        assert d_eval(sl2, b, V(1, 1), W(1, 0)) == 1
        assert d_eval(sl2, b, W(1, 0), V(1, 1)) == 0
        assert d_eval(sl2, b, W(1, 2), V(1, 1)) == 1

    def test_two_forms_agree(self, a2, b2, rng):
        for cd, choices in (
            (a2, [Bicharacter.nakajima(), Bicharacter.at_node(1), Bicharacter.at_node(2)]),
            (b2, [Bicharacter.at_node(1), Bicharacter.at_node(2)]),
        ):
            for _ in range(30):
                m1 = HatMonomial.from_mappings(
                    v={(rng.choice([1, 2]), rng.randint(-3, 3)): rng.randint(1, 2)},
                    w={(rng.choice([1, 2]), rng.randint(-3, 3)): 1},
                )
                m2 = HatMonomial.from_mappings(
                    v={(rng.choice([1, 2]), rng.randint(-3, 3)): 1},
                    w={(rng.choice([1, 2]), rng.randint(-3, 3)): rng.randint(1, 2)},
                )
                b = rng.choice(choices)
                assert d_eval(cd, b, m1, m2) == d_eval_alternate(cd, b, m1, m2)


class TestStarProduct:
    """Test the twisted products."""

    def test_zero_is_commutative_product(self, a2):
        x = HatElement({W(1, 0): 1, V(1, 1): TPoly({1: 1})})
        z = HatElement({V(2, 2): 2})
        assert star_mul(a2, Bicharacter.zero(), x, z) == x * z

    def test_nakajima_twist(self, sl2):
        b = Bicharacter.nakajima()
        left = star_mul(sl2, b, HatElement({V(1, 1): 1}), HatElement({W(1, 0): 1}))
        assert left == HatElement({V(1, 1) * W(1, 0): TPoly({2: 1})})
        right = star_mul(sl2, b, HatElement({W(1, 0): 1}), HatElement({V(1, 1): 1}))
        assert right == HatElement({V(1, 1) * W(1, 0): ONE})

    def test_star_power_zero(self, sl2):
        x = HatElement({W(1, 0): 1})
        assert star_power(sl2, Bicharacter.nakajima(), x, 0) == HatElement.scalar(1)


class TestProjections:
    """Test the ring maps out of the hat ring."""

    def test_pi_tilde(self, sl2):
        assert pi_tilde_monomial(sl2, V(1, 1)) == y((1, 0, -1), (1, 2, -1))
        assert pi_tilde_monomial(sl2, W(1, 0) * V(1, 1)) == y((1, 2, -1))

    def test_pi_tilde_t_evaluates_at_one(self, sl2):
        x = HatElement({W(1, 0): TPoly({2: 1, 0: 1}), W(1, 0) * V(1, 1): TPoly({-1: 3})})
        assert pi_tilde_t(sl2, x) == ClassicalElement({y((1, 0, 1)): 2, y((1, 2, -1)): 3})

    def test_hat_pi_zero_is_morphism(self, a2):
        b = Bicharacter.zero()
        x = HatElement({W(1, 0): 1, V(1, 1): TPoly({1: 2})})
        z = HatElement({W(2, 1): TPoly({-1: 1}), V(2, 2): 1})
        assert hat_pi_d(a2, b, x * z) == hat_pi_d(a2, b, x) * hat_pi_d(a2, b, z)

    def test_hat_pi_nakajima_scales(self, sl2):
        """Test m -> t^(-d(m, m)) on a monomial with d(m, m) = 1."""
        m = W(1, 0, 2) * V(1, 1)
        assert d_eval(sl2, Bicharacter.nakajima(), m, m) == 1
        image = hat_pi_d(sl2, Bicharacter.nakajima(), HatElement({m: 1}))
        assert image == YElement({pi_tilde_monomial(sl2, m): TPoly({-1: 1})})

    def test_pi_t_after_hat_pi(self, a2):
        x = HatElement({W(1, 0) * V(2, 1): TPoly({3: 1, -1: 2})})
        for b in (Bicharacter.zero(), Bicharacter.nakajima(), Bicharacter.at_node(1)):
            assert pi_t(hat_pi_d(a2, b, x)) == pi_tilde_t(a2, x)

    def test_pi_node(self, a2):
        """Test pi_1 keeps node 1 variables and turns V_{2,a} into W_{1,a}."""
        x = HatElement({W(1, 0) * W(2, 3) * V(2, 1) * V(1, 2): 1})
        assert pi_node(a2, 1, x) == HatElement({W(1, 0) * W(1, 1) * V(1, 2): 1})

    def test_pi_node_b2(self, b2):
        x = HatElement({V(1, 0): 1})
        assert pi_node(b2, 2, x) == HatElement({W(2, -1) * W(2, 1): 1})


class TestBar:
    """Test the bar involutions."""

    def test_bar_y(self):
        x = YElement({y((1, 0, 1)): TPoly({2: 1, -1: 3})})
        assert bar_y(x) == YElement({y((1, 0, 1)): TPoly({-2: 1, 1: 3})})
        assert bar_y(bar_y(x)) == x

    def test_bar_hat_nakajima(self, sl2):
        """Test t m is bar-invariant when d(m, m) = 1."""
        m = W(1, 0, 2) * V(1, 1)
        x = HatElement({m: TPoly({1: 1})})
        assert bar_hat(sl2, Bicharacter.nakajima(), x) == HatElement({m: TPoly({1: 1})})
        assert bar_hat(sl2, Bicharacter.zero(), x) == HatElement({m: TPoly({-1: 1})})

    def test_bar_antimultiplicative(self, a2):
        b = Bicharacter.nakajima()
        x = HatElement({W(1, 0): TPoly({1: 1}), V(1, 1): 1})
        z = HatElement({W(1, 2) * V(2, 2): 1, V(1, 3): TPoly({-2: 1})})
        assert bar_hat(a2, b, star_mul(a2, b, x, z)) == star_mul(
            a2, b, bar_hat(a2, b, z), bar_hat(a2, b, x)
        )


class TestOrder:
    """Test comparisons in the A-order."""

    def test_lower_by_one_a(self, a2, window):
        m2 = y((1, 0, 1))
        m1 = m2 * a_inverse_monomial(a2, 1, 1)
        result = order_le(a2, m1, m2, window)
        assert result.relation is Relation.LE
        assert result.certificate == {SpectralIndex(1, 1): 1}
        assert order_le(a2, m2, m1, window).relation is Relation.GE

    def test_certificate_reconstructs(self, b2, window):
        m2 = y((1, 0, 1), (2, 1, 2))
        m1 = m2 * a_inverse_monomial(b2, 1, 2) * a_inverse_monomial(b2, 2, 1) ** 2
        result = order_le(b2, m1, m2, window)
        assert result.relation is Relation.LE
        inverse = {idx: -e for idx, e in result.certificate.items()}
        assert m1 == m2 * a_product(b2, inverse)

    def test_equal_and_incomparable(self, a2, window):
        assert order_le(a2, y((1, 0, 1)), y((1, 0, 1)), window).relation is Relation.EQUAL
        assert order_le(a2, y((1, 0, 1)), y((2, 0, 1)), window).relation is Relation.INCOMPARABLE

    def test_single_sign_incomparable(self, b2):
        # one positive exponent, but no A-factor fits above k=-1
        for w in (Window(-6, 6), Window(-20, 20)):
            assert order_le(b2, YMonomial(), y((2, -1, 1)), w).relation is Relation.INCOMPARABLE
            assert order_le(b2, y((2, -1, 1)), YMonomial(), w).relation is Relation.INCOMPARABLE

    @pytest.mark.parametrize("name", ["sl2", "A2", "B2", "G2"])
    def test_relation_independent_of_window(self, name, make_sampler, window):
        cd = load_cartan(name)
        sampler = make_sampler(cd)
        for _ in range(40):
            m1, m2 = sampler.y_monomial(3), sampler.y_monomial(3)
            if sampler.rng.random() < 0.5:
                m1 = m2 * a_inverse_monomial(cd, sampler.node(), sampler.rng.randint(-2, 2))
            small = order_le(cd, m1, m2, window)
            large = order_le(cd, m1, m2, Window(-20, 20))
            assert small == large, (m1, m2)

    def test_window_too_small(self, a2):
        with pytest.raises(WindowTooSmallError) as exc_info:
            order_le(a2, y((1, 8, 1)), y((1, 0, 1)), Window(-6, 6))
        assert exc_info.value.required == Window(-6, 8)
