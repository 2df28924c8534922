"""Tests for JSON encodings and report models."""

import json

import pytest

from qt_screening.algebra.elements import ClassicalElement, HatElement, Ring, YElement
from qt_screening.algebra.kernels import Flavor, decompose, e_hat
from qt_screening.algebra.monomials import HatMonomial, YMonomial
from qt_screening.algebra.screening import ScreenerElement
from qt_screening.algebra.tpoly import TPoly
from qt_screening.models import (
    Counterexample,
    MonomialModel,
    PropertyOutcome,
    SuiteReport,
    decode_coefficient,
    decode_element,
    decode_monomial,
    decode_screener,
    encode_decomposition,
    encode_element,
    encode_monomial,
    encode_screener,
    encode_tpoly,
    to_json,
)

W = HatMonomial.ww
V = HatMonomial.vv
Y = YMonomial.y


def test_encode_tpoly():
    """Test exponents become string keys."""
    assert encode_tpoly(TPoly({0: 1, 2: 1})) == {"0": 1, "2": 1}
    assert encode_tpoly(TPoly({-2: -1})) == {"-2": -1}


def test_encode_monomial():
    """Test hat and Y monomials keep separate exponent tables."""
    hat = encode_monomial(W(1, 0) * V(1, 1, 2))
    assert hat.model_dump(exclude_none=True) == {"V": {"1,1": 2}, "W": {"1,0": 1}}
    y = encode_monomial(Y(2, -3, -1))
    assert y.model_dump(exclude_none=True) == {"Y": {"2,-3": -1}}
    assert encode_monomial(HatMonomial()).model_dump(exclude_none=True) == {}


def test_encode_element_json():
    """Test element terms serialize with their coefficients."""
    x = HatElement({W(1, 0): 1, W(1, 0) * V(1, 1): TPoly({0: 1, 2: 1})})
    terms = [t.model_dump(exclude_none=True) for t in encode_element(x)]
    assert {"W": {"1,0": 1}, "coeff": {"0": 1}} in terms
    assert {"V": {"1,1": 1}, "W": {"1,0": 1}, "coeff": {"0": 1, "2": 1}} in terms


@pytest.mark.parametrize(
    "x, ring",
    [
        (HatElement({W(1, 0) * V(2, 1): TPoly({-1: 2, 3: 1}), HatMonomial(): 4}), Ring.HAT),
        (YElement({Y(1, 0) * Y(2, 1, -2): TPoly({1: -1})}), Ring.Y),
        (ClassicalElement({Y(1, 2, -1): 5}), Ring.CLASSICAL),
    ],
)
def test_decode_element(x, ring):
    """Test decoding restores the element in its ring."""
    assert decode_element(encode_element(x), ring) == x


def test_decode_rejects_foreign_exponents():
    """Test monomial tables must match the ring."""
    with pytest.raises(ValueError):
        decode_monomial(MonomialModel(Y={"1,0": 1}), Ring.HAT)
    with pytest.raises(ValueError):
        decode_monomial(MonomialModel(W={"1,0": 1}), Ring.Y)


def test_decode_coefficient():
    """Test integer coefficients lift to constants outside the classical ring."""
    assert decode_coefficient(3, Ring.Y) == TPoly.const(3)
    assert decode_coefficient({"1": 2}, Ring.HAT) == TPoly({1: 2})
    assert decode_coefficient(3, Ring.CLASSICAL) == 3
    with pytest.raises(ValueError):
        decode_coefficient({"1": 2}, Ring.CLASSICAL)


def test_screener_encoding():
    """Test screeners carry node, ring and S positions."""
    s = ScreenerElement(1, Ring.HAT, {(V(1, 1), 0): TPoly({-2: -1}), (HatMonomial(), 0): -1})
    model = encode_screener(s)
    assert model.node == 1
    assert model.ring == "hat"
    assert {t.k for t in model.terms} == {0}
    assert decode_screener(model) == s


def test_decomposition_encoding(sl2):
    """Test the dominant part and remainder are both listed."""
    x = e_hat(sl2, 1, W(1, 0)) + HatElement({V(1, 1): 1})
    model = encode_decomposition(decompose(sl2, 1, x, Flavor.HAT))
    assert model.flavor == "hat"
    assert [d.monomial.W for d in model.dominant] == [{"1,0": 1}]
    assert [t.V for t in model.remainder] == [{"1,1": 1}]


def test_suite_report_json():
    """Test reports serialize deterministically and drop unset fields."""
    report = SuiteReport(
        suite="binom",
        config={"seed": 0},
        passed=3,
        failed=0,
        properties=[PropertyOutcome(name="symmetric", anchor="Gaussian binomials", passed=3)],
    )
    text = to_json(report)
    data = json.loads(text)
    assert "counterexample" not in data
    assert data["properties"][0]["passed"] == 3
    assert to_json(report) == text

    failing = report.model_copy(
        update={
            "failed": 1,
            "counterexample": Counterexample(
                check="symmetric", anchor="Gaussian binomials", cartan="A2", index=4, detail="x"
            ),
        }
    )
    assert json.loads(to_json(failing))["counterexample"]["index"] == 4
