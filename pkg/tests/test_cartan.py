"""Tests for Cartan data and the elementary monomials A_{i,a}."""

import json

import pytest

from qt_screening.algebra.cartan import (
    a_inverse_monomial,
    a_monomial,
    a_support_window,
    load_cartan,
    minimal_symmetrizers,
)
from qt_screening.algebra.lattice import Window
from qt_screening.algebra.monomials import YMonomial
from qt_screening.errors import CartanError


def y(*factors) -> YMonomial:
    return YMonomial.from_mapping({(i, k): e for i, k, e in factors})


class TestLoadCartan:
    """Test Cartan spec resolution."""

    def test_a2(self, a2):
        assert a2.matrix == ((2, -1), (-1, 2))
        assert a2.symmetrizers == (1, 1)
        assert a2.is_simply_laced
        assert str(a2) == "A2"

    def test_sl2_is_a1(self, sl2):
        assert sl2 == load_cartan("A1")
        assert sl2.matrix == ((2,),)

    def test_b2_convention(self, b2):
        """Test B2 uses C_ij = (alpha_i, alpha_j) / r_i."""
        assert b2.matrix == ((2, -1), (-2, 2))
        assert b2.symmetrizers == (2, 1)
        assert not b2.is_simply_laced

    def test_g2(self, g2):
        assert g2.matrix == ((2, -3), (-1, 2))
        assert g2.symmetrizers == (1, 3)

    def test_c2_is_transpose_of_b2(self, b2):
        c2 = load_cartan("C2")
        assert c2.matrix == ((2, -2), (-1, 2))
        assert c2.symmetrizers == (1, 2)
        assert c2.matrix == tuple(zip(*b2.matrix))

    def test_product_type(self):
        cd = load_cartan("A1xA1")
        assert cd.matrix == ((2, 0), (0, 2))
        assert cd.neighbours(1) == []
        assert load_cartan("A1×A1") == cd

    def test_a3_neighbours(self, a3):
        assert a3.neighbours(2) == [1, 3]
        assert a3.neighbours(1) == [2]

    def test_json_with_symmetrizers(self, b2):
        cd = load_cartan(json.dumps({"C": [[2, -1], [-2, 2]], "r": [2, 1]}))
        assert cd == b2

    def test_json_infers_symmetrizers(self, b2, g2):
        assert load_cartan({"C": [[2, -1], [-2, 2]]}).symmetrizers == b2.symmetrizers
        assert load_cartan({"C": [[2, -3], [-1, 2]]}).symmetrizers == g2.symmetrizers

    def test_json_name_is_compact_json(self):
        cd = load_cartan({"C": [[2, -1], [-1, 2]]})
        assert str(cd) == '{"C":[[2,-1],[-1,2]],"r":[1,1]}'

    def test_named_types(self):
        assert load_cartan("D4").n == 4
        assert load_cartan("E6").n == 6
        assert load_cartan("F4").symmetrizers == (2, 2, 1, 1)


class TestInvalidCartan:
    """Test validation failures."""

    @pytest.mark.parametrize(
        "spec",
        [
            "Z3",
            "B1",
            "{not json",
            {"C": [[2, 1], [-1, 2]]},
            {"C": [[2, -1], [0, 2]]},
            {"C": [[3, -1], [-1, 2]]},
            {"C": [[2, -1], [-1, 2]], "r": [1, 2]},
            {"C": [[2, -4], [-1, 2]], "r": [1, 4]},
            {"r": [1]},
        ],
    )
    def test_rejected(self, spec):
        with pytest.raises(CartanError):
            load_cartan(spec)

    def test_check_node(self, a2):
        a2.check_node(2)
        with pytest.raises(CartanError, match="outside"):
            a2.check_node(3)

    def test_minimal_symmetrizers_detects_asymmetry(self):
        with pytest.raises(CartanError):
            minimal_symmetrizers([[2, -1, -1], [-1, 2, -1], [-2, -1, 2]])


class TestAMonomials:
    """Test A_{i,q^k}^-1 exponents."""

    def test_sl2(self, sl2):
        assert a_inverse_monomial(sl2, 1, 1) == y((1, 0, -1), (1, 2, -1))

    def test_a2(self, a2):
        assert a_inverse_monomial(a2, 1, 1) == y((1, 0, -1), (1, 2, -1), (2, 1, 1))
        assert a_monomial(a2, 2, 3) == y((2, 2, 1), (2, 4, 1), (1, 3, -1))

    def test_b2_long_root(self, b2):
        """Test the long node spreads over k +- 1 on the short node."""
        assert a_inverse_monomial(b2, 1, 0) == y((1, -2, -1), (1, 2, -1), (2, -1, 1), (2, 1, 1))

    def test_b2_short_root(self, b2):
        assert a_inverse_monomial(b2, 2, 0) == y((2, -1, -1), (2, 1, -1), (1, 0, 1))

    def test_g2_long_root(self, g2):
        """Test C_ji = -3 gives three cross terms."""
        assert a_inverse_monomial(g2, 2, 0) == y((2, -3, -1), (2, 3, -1), (1, -2, 1), (1, 0, 1), (1, 2, 1))
        assert a_inverse_monomial(g2, 1, 0) == y((1, -1, -1), (1, 1, -1), (2, 0, 1))

    def test_support_window(self, b2):
        assert a_support_window(b2, 1, 0) == Window(-2, 2)
