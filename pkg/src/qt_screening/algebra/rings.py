"""Weights, bicharacters, twisted products, projections, bar involutions and the A-order.

The weight u_{i,a}(m) of a hat monomial is the exponent of Y_{i,a} in its image under the
projection V_{j,b} -> A_{j,b}^-1, W_{j,b} -> Y_{j,b}. For a node j != i the variable V_{j,b}
contributes according to C_ij: +1 at b (C_ij = -1), at b +- 1 (C_ij = -2), or at b - 2, b, b + 2
(C_ij = -3).
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterable, Literal, Optional, Tuple, Union

from qt_screening.algebra.cartan import (
    CROSS_OFFSETS,
    CartanData,
    a_inverse_monomial,
    a_monomial,
)
from qt_screening.algebra.elements import ClassicalElement, HatElement, YElement
from qt_screening.algebra.lattice import SpectralIndex, Window
from qt_screening.algebra.monomials import HatMonomial, Monomial, YMonomial
from qt_screening.algebra.tpoly import TPoly
from qt_screening.errors import BicharacterError, WindowTooSmallError

logger = logging.getLogger(__name__)


# -- weights -----------------------------------------------------------------------------


@lru_cache(maxsize=65536)
def _hat_profile(cd: CartanData, m: HatMonomial, i: int) -> Tuple[Tuple[int, int], ...]:
    prof: Dict[int, int] = {}
    r = cd.r(i)
    for idx, e in m.w:
        if idx.node == i:
            prof[idx.k] = prof.get(idx.k, 0) + e
    for idx, e in m.v:
        if idx.node == i:
            prof[idx.k - r] = prof.get(idx.k - r, 0) - e
            prof[idx.k + r] = prof.get(idx.k + r, 0) - e
        else:
            for offset in CROSS_OFFSETS[cd.c(i, idx.node)]:
                prof[idx.k + offset] = prof.get(idx.k + offset, 0) + e
    return tuple(sorted((k, u) for k, u in prof.items() if u))


def u_profile(cd: CartanData, m: Monomial, i: int) -> Dict[int, int]:
    """All nonzero u_{i,q^k}(m) as a mapping k -> u (the node-i influence set of m)."""
    if isinstance(m, HatMonomial):
        return dict(_hat_profile(cd, m, i))
    return m.node_profile(i)


def u_of_hat(cd: CartanData, m: HatMonomial, i: int, k: int) -> int:
    """u_{i,q^k}(m) = w_{i,a} - v_{i,aq_i^-1} - v_{i,aq_i} + cross terms of the neighbours."""
    cd.check_node(i)
    return dict(_hat_profile(cd, m, i)).get(k, 0)


def u_of_y(m: YMonomial, i: int, k: int) -> int:
    """Exponent of Y_{i,q^k} in m."""
    return m.exponent(i, k)


def wt_i(cd: CartanData, m: Monomial, i: int) -> int:
    """i-weight: sum over a of u_{i,a}(m)."""
    return sum(u_profile(cd, m, i).values())


def is_dominant(cd: CartanData, m: Monomial, i: int) -> bool:
    """True if u_{i,a}(m) >= 0 for every a."""
    return all(u >= 0 for u in u_profile(cd, m, i).values())


def is_all_dominant(cd: CartanData, m: Monomial) -> bool:
    return all(is_dominant(cd, m, i) for i in cd.nodes)


# -- bicharacters ------------------------------------------------------------------------


@dataclass(frozen=True)
class Bicharacter:
    """Biadditive pairing d on hat monomials defining m1 *_d m2 = t^(2 d(m1, m2)) m1 m2.

    kind is "zero", "nakajima" (simply-laced data only) or "node" with a fixed node.
    """

    kind: Literal["zero", "nakajima", "node"] = "zero"
    node: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in ("zero", "nakajima", "node"):
            raise BicharacterError(f"unknown bicharacter kind '{self.kind}'")
        if (self.kind == "node") != (self.node is not None):
            raise BicharacterError("the node bicharacter needs exactly one node")

    @classmethod
    def zero(cls) -> "Bicharacter":
        return cls("zero")

    @classmethod
    def nakajima(cls) -> "Bicharacter":
        return cls("nakajima")

    @classmethod
    def at_node(cls, i: int) -> "Bicharacter":
        return cls("node", i)

    @classmethod
    def parse(cls, text: str) -> "Bicharacter":
        """Parse 'zero', 'nakajima' or 'node(i)'."""
        value = text.strip().lower()
        if value in ("zero", "nakajima"):
            return cls(value)  # type: ignore[arg-type]
        if value.startswith("node(") and value.endswith(")"):
            try:
                return cls.at_node(int(value[5:-1]))
            except ValueError as exc:
                raise BicharacterError(f"bad node in '{text}'") from exc
        raise BicharacterError(f"unknown bicharacter '{text}'")

    def check(self, cd: CartanData) -> None:
        """Raise BicharacterError if the bicharacter is undefined for cd."""
        if self.kind == "nakajima" and not cd.is_simply_laced:
            raise BicharacterError(f"the nakajima bicharacter needs a simply-laced datum, got {cd}")
        if self.kind == "node":
            assert self.node is not None
            if not 1 <= self.node <= cd.n:
                raise BicharacterError(f"node {self.node} is outside 1..{cd.n}")

    def __str__(self) -> str:
        return f"node({self.node})" if self.kind == "node" else self.kind


def _u(cd: CartanData, m: HatMonomial, i: int, k: int) -> int:
    return dict(_hat_profile(cd, m, i)).get(k, 0)


def _d_nakajima(cd: CartanData, m1: HatMonomial, m2: HatMonomial) -> int:
    # sum v_{i,aq}(m1) u_{i,a}(m2) + w_{i,aq}(m1) v_{i,a}(m2)
    total = 0
    for idx, e in m1.v:
        total += e * _u(cd, m2, idx.node, idx.k - 1)
    for idx, e in m1.w:
        total += e * m2.v_exponent(idx.node, idx.k - 1)
    return total


def _d_nakajima_alternate(cd: CartanData, m1: HatMonomial, m2: HatMonomial) -> int:
    # sum u_{i,a}(m1) v_{i,aq^-1}(m2) + v_{i,a}(m1) w_{i,aq^-1}(m2)
    total = 0
    for idx, e in m2.v:
        total += e * _u(cd, m1, idx.node, idx.k + 1)
    for idx, e in m2.w:
        total += e * m1.v_exponent(idx.node, idx.k + 1)
    return total


def _d_node(cd: CartanData, i: int, m1: HatMonomial, m2: HatMonomial) -> int:
    r = cd.r(i)
    total = 0
    for idx, e in m1.v:
        if idx.node == i:
            total += e * _u(cd, m2, i, idx.k - r)
    for idx, e in m1.w:
        if idx.node == i:
            total += e * m2.v_exponent(i, idx.k - r)
    for idx, e in m2.v:
        if idx.node == i:
            a = idx.k
            total += e * (
                _u(cd, m1, i, a + r)
                - m1.w_exponent(i, a + r)
                + m1.v_exponent(i, a)
                + m1.v_exponent(i, a + 2 * r)
            )
    return total


def _d_node_alternate(cd: CartanData, i: int, m1: HatMonomial, m2: HatMonomial) -> int:
    r = cd.r(i)
    total = 0
    for idx, e in m2.v:
        if idx.node == i:
            total += e * _u(cd, m1, i, idx.k + r)
    for idx, e in m2.w:
        if idx.node == i:
            total += e * m1.v_exponent(i, idx.k + r)
    for idx, e in m1.v:
        if idx.node == i:
            a = idx.k - r
            total += e * (
                _u(cd, m2, i, a)
                - m2.w_exponent(i, a)
                + m2.v_exponent(i, a - r)
                + m2.v_exponent(i, a + r)
            )
    return total


def d_eval(cd: CartanData, b: Bicharacter, m1: HatMonomial, m2: HatMonomial) -> int:
    """Evaluate the bicharacter b on (m1, m2).

    Raises:
        BicharacterError: nakajima on a non simply-laced datum, or a node outside 1..n
    """
    if b.kind == "zero":
        return 0
    b.check(cd)
    if b.kind == "nakajima":
        return _d_nakajima(cd, m1, m2)
    assert b.node is not None
    return _d_node(cd, b.node, m1, m2)


def d_eval_alternate(cd: CartanData, b: Bicharacter, m1: HatMonomial, m2: HatMonomial) -> int:
    """Same pairing computed from the second printed expression (u on the left factor)."""
    if b.kind == "zero":
        return 0
    b.check(cd)
    if b.kind == "nakajima":
        return _d_nakajima_alternate(cd, m1, m2)
    assert b.node is not None
    return _d_node_alternate(cd, b.node, m1, m2)


def star_mul(cd: CartanData, b: Bicharacter, x: HatElement, y: HatElement) -> HatElement:
    """Twisted product: m1 *_d m2 = t^(2 d(m1, m2)) m1 m2, extended bilinearly."""
    b.check(cd)
    acc: Dict[HatMonomial, TPoly] = {}
    for m1, c1 in x:
        for m2, c2 in y:
            m = m1 * m2
            c = (c1 * c2).shift(2 * d_eval(cd, b, m1, m2))  # type: ignore[union-attr]
            acc[m] = acc[m] + c if m in acc else c
    return HatElement(acc)


def star_product(cd: CartanData, b: Bicharacter, factors: Iterable[HatElement]) -> HatElement:
    """Left-to-right twisted product of the factors (the empty product is 1)."""
    result = HatElement.scalar(1)
    for factor in factors:
        result = star_mul(cd, b, result, factor)
    return result


def star_power(cd: CartanData, b: Bicharacter, x: HatElement, power: int) -> HatElement:
    return star_product(cd, b, [x] * power)


# -- projections -------------------------------------------------------------------------


@lru_cache(maxsize=65536)
def pi_tilde_monomial(cd: CartanData, m: HatMonomial) -> YMonomial:
    """W_{i,a} -> Y_{i,a}, V_{i,a} -> A_{i,a}^-1 on a single monomial."""
    exps: Dict[SpectralIndex, int] = dict(m.w)
    for idx, e in m.v:
        for target, f in a_inverse_monomial(cd, idx.node, idx.k).exponents:
            exps[target] = exps.get(target, 0) + e * f
    return YMonomial.from_mapping(exps)


def pi_tilde_t(cd: CartanData, x: HatElement) -> ClassicalElement:
    """Ring morphism to the classical ring, t -> 1."""
    return ClassicalElement((pi_tilde_monomial(cd, m), c.at_one()) for m, c in x)  # type: ignore[union-attr]


def hat_pi_d(cd: CartanData, b: Bicharacter, x: HatElement) -> YElement:
    """Z[t, t^-1]-linear map m -> t^(-d(m, m)) prod Y_{i,a}^{u_{i,a}(m)}.

    With the zero bicharacter this is the ring morphism from the hat ring onto the Y ring.
    """
    return YElement(
        (pi_tilde_monomial(cd, m), TPoly.coerce(c).shift(-d_eval(cd, b, m, m))) for m, c in x
    )


def pi_t(x: YElement) -> ClassicalElement:
    """Specialize t -> 1."""
    return ClassicalElement((m, c.at_one()) for m, c in x)  # type: ignore[union-attr]


@lru_cache(maxsize=65536)
def _pi_node_monomial(cd: CartanData, i: int, m: HatMonomial) -> HatMonomial:
    v: Dict[SpectralIndex, int] = {}
    w: Dict[SpectralIndex, int] = {}
    for idx, e in m.w:
        if idx.node == i:
            w[idx] = w.get(idx, 0) + e
    for idx, e in m.v:
        if idx.node == i:
            v[idx] = v.get(idx, 0) + e
            continue
        for offset in CROSS_OFFSETS[cd.c(i, idx.node)]:
            target = SpectralIndex(i, idx.k + offset)
            w[target] = w.get(target, 0) + e
    return HatMonomial.from_mappings(v, w)


def pi_node(cd: CartanData, i: int, x: HatElement) -> HatElement:
    """Ring morphism keeping V_{i,a}, W_{i,a}; W_{j,a} -> 1 and V_{j,a} -> W_i-factors by C_ij."""
    cd.check_node(i)
    return HatElement((_pi_node_monomial(cd, i, m), c) for m, c in x)


# -- bar involutions ---------------------------------------------------------------------


def bar_hat(cd: CartanData, b: Bicharacter, x: HatElement) -> HatElement:
    """t -> t^-1 and m -> t^(2 d(m, m)) m."""
    return HatElement(
        (m, TPoly.coerce(c).bar().shift(2 * d_eval(cd, b, m, m))) for m, c in x
    )


def bar_y(x: YElement) -> YElement:
    """t -> t^-1, Y-monomials fixed."""
    return YElement((m, TPoly.coerce(c).bar()) for m, c in x)


# -- the A-order -------------------------------------------------------------------------


class Relation(str, Enum):
    LE = "le"
    GE = "ge"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class OrderResult:
    """Outcome of comparing two Y-monomials.

    For LE the certificate v >= 0 satisfies m1 = m2 * prod A_{i,k}^{-v_{i,k}}; for GE it
    satisfies m2 = m1 * prod A_{i,k}^{-v_{i,k}}.
    """

    relation: Relation
    certificate: Dict[SpectralIndex, int] = field(default_factory=dict)


def a_product(cd: CartanData, exponents: Dict[SpectralIndex, int]) -> YMonomial:
    """prod A_{i,k}^{e_{i,k}}."""
    result = YMonomial()
    for idx, e in exponents.items():
        result = result * (a_monomial(cd, idx.node, idx.k) ** e)
    return result


def order_le(cd: CartanData, m1: YMonomial, m2: YMonomial, window: Window) -> OrderResult:
    """Decide how m1 and m2 compare in the order generated by m * A^-1 <= m.

    Scans the ratio m2 / m1 from its highest lattice point down, peeling the unique A_{i,k}
    whose top point (i, k + r_i) carries the current residual exponent. All peeled factors share
    one sign, so the lowest point of the lowest factor is never cancelled: a factor reaching below
    the lowest point of the ratio means no certificate exists.

    Raises:
        WindowTooSmallError: if a support point of m1 or m2 lies outside the window
    """
    for idx in m1.support() + m2.support():
        if not window.contains(idx.k):
            raise WindowTooSmallError(
                f"monomial support point {tuple(idx)} lies outside window {window}",
                required=window.union(Window(idx.k, idx.k)),
            )
    residual: Dict[SpectralIndex, int] = (m2 / m1).as_dict()
    floor = min((idx.k for idx in residual), default=0)
    certificate: Dict[SpectralIndex, int] = {}
    sign = 0
    while residual:
        top = max(idx.k for idx in residual)
        # ties at the top level: longest root first
        idx = min(
            (p for p in residual if p.k == top), key=lambda p: (-cd.r(p.node), p.node)
        )
        e = residual[idx]
        step_sign = 1 if e > 0 else -1
        if sign and step_sign != sign:
            logger.debug(f"order scan: mixed signs at {tuple(idx)}")
            return OrderResult(Relation.INCOMPARABLE)
        sign = step_sign
        center = SpectralIndex(idx.node, idx.k - cd.r(idx.node))
        a = a_monomial(cd, center.node, center.k)
        lowest = min(p.k for p, _ in a.exponents)
        if lowest < floor:
            logger.debug(f"order scan: A[{center.node},{center.k}] reaches k={lowest} below the ratio")
            return OrderResult(Relation.INCOMPARABLE)
        for p, f in a.exponents:
            value = residual.get(p, 0) - e * f
            if value:
                residual[p] = value
            else:
                residual.pop(p, None)
        certificate[center] = certificate.get(center, 0) + e
    if not certificate:
        return OrderResult(Relation.EQUAL)
    if sign > 0:
        return OrderResult(Relation.LE, certificate)
    return OrderResult(Relation.GE, {idx: -e for idx, e in certificate.items()})


def comparison_window(cd: CartanData, *monomials: YMonomial) -> Window:
    """Window spanning the supports with room for the A-factors hanging below them."""
    points = [idx.k for m in monomials for idx in m.support()]
    return Window.enclosing(points, pad=2 * cd.max_r + 2)


__all__ = [
    "Bicharacter",
    "OrderResult",
    "Relation",
    "a_product",
    "bar_hat",
    "bar_y",
    "comparison_window",
    "d_eval",
    "d_eval_alternate",
    "hat_pi_d",
    "is_all_dominant",
    "is_dominant",
    "order_le",
    "pi_node",
    "pi_t",
    "pi_tilde_monomial",
    "pi_tilde_t",
    "star_mul",
    "star_power",
    "star_product",
    "u_of_hat",
    "u_of_y",
    "u_profile",
    "wt_i",
]
