"""Screener modules, screening operators and quotient normal forms.

A screener element for node i is a finite sum c * m * S_{i,q^k} kept in left-normal form (all S
symbols on the right). Right multiplication by a monomial moves it past S with
S_{i,a} m = t^(2 u_{i,a}(m)) m S_{i,a}.

Quotients:
    hatF        hat ring; relation m V_{i,k-r} S_{i,k} = t^(2 - 2u_{i,k}(m)) m S_{i,k-2r}
    yF          Y ring;   t^(2u_{i,k+2r}(m)) m A_{i,k+r}^-1 S_{i,k+2r} = t^2 m S_{i,k}
    yFprime     Y ring;   t^(u_{i,k+2r}(m) - u_{i,k}(m)) m A_{i,k+r}^-1 S_{i,k+2r} = t m S_{i,k}
    classicalF  t = 1;    m A_{i,k+r}^-1 S_{i,k+2r} = m S_{i,k}

hatF is reduced by stripping V factors; the other three shift every S_{i,k} to the anchor
k mod 2r_i of its residue class.
"""

import logging
from enum import Enum
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple, Union

from qt_screening.algebra.cartan import CartanData, a_inverse_monomial, a_monomial
from qt_screening.algebra.elements import (
    ClassicalElement,
    Coefficient,
    Element,
    HatElement,
    Ring,
    YElement,
)
from qt_screening.algebra.monomials import HatMonomial, Monomial, YMonomial
from qt_screening.algebra.rings import (
    Bicharacter,
    d_eval,
    hat_pi_d,
    pi_node,
    pi_tilde_monomial,
    u_profile,
)
from qt_screening.algebra.tpoly import TPoly, t_integer
from qt_screening.errors import RingMismatchError

logger = logging.getLogger(__name__)

ScreenerKey = Tuple[Monomial, int]


class QuotientKind(str, Enum):
    HAT_F = "hatF"
    Y_F = "yF"
    Y_F_PRIME = "yFprime"
    CLASSICAL_F = "classicalF"

    @property
    def ring(self) -> Ring:
        if self is QuotientKind.HAT_F:
            return Ring.HAT
        if self is QuotientKind.CLASSICAL_F:
            return Ring.CLASSICAL
        return Ring.Y


def _coerce(ring: Ring, c: Any) -> Coefficient:
    if ring is Ring.CLASSICAL:
        return ClassicalElement.coerce(c)
    return TPoly.coerce(c)


def _monomial_type(ring: Ring) -> type:
    return HatMonomial if ring is Ring.HAT else YMonomial


class ScreenerElement:
    """Sum of c * m * S_{node,q^k} in left-normal form, for a fixed node and ring."""

    __slots__ = ("node", "ring", "_terms")

    def __init__(
        self,
        node: int,
        ring: Union[Ring, str],
        terms: Union[Dict[ScreenerKey, Any], Iterable[Tuple[ScreenerKey, Any]], None] = None,
    ):
        self.node = node
        self.ring = Ring(ring)
        mtype = _monomial_type(self.ring)
        acc: Dict[ScreenerKey, Coefficient] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            for (m, k), c in items:
                if not isinstance(m, mtype):
                    raise RingMismatchError(
                        f"{self.ring.value} screener terms need {mtype.__name__}, got {type(m).__name__}"
                    )
                coeff = _coerce(self.ring, c)
                key = (m, int(k))
                acc[key] = acc[key] + coeff if key in acc else coeff
        self._terms: Dict[ScreenerKey, Coefficient] = {
            key: acc[key] for key in sorted(acc, key=lambda key: (key[0], key[1])) if acc[key]
        }

    @classmethod
    def zero(cls, node: int, ring: Union[Ring, str]) -> "ScreenerElement":
        return cls(node, ring)

    def terms(self) -> List[Tuple[ScreenerKey, Coefficient]]:
        return list(self._terms.items())

    def coefficient(self, m: Monomial, k: int) -> Coefficient:
        return self._terms.get((m, k), _coerce(self.ring, 0))

    def __iter__(self) -> Iterator[Tuple[ScreenerKey, Coefficient]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: "ScreenerElement") -> None:
        if other.node != self.node or other.ring is not self.ring:
            raise RingMismatchError(
                f"cannot combine screeners for node {self.node}/{self.ring.value} and "
                f"node {other.node}/{other.ring.value}"
            )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool) and other == 0:
            return not self._terms
        if not isinstance(other, ScreenerElement):
            return NotImplemented
        return (
            self.node == other.node and self.ring is other.ring and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.node, self.ring, tuple(self._terms.items())))

    def __add__(self, other: "ScreenerElement") -> "ScreenerElement":
        if not isinstance(other, ScreenerElement):
            return NotImplemented
        self._check(other)
        return ScreenerElement(
            self.node, self.ring, list(self._terms.items()) + list(other._terms.items())
        )

    def __neg__(self) -> "ScreenerElement":
        return ScreenerElement(self.node, self.ring, [(key, -c) for key, c in self._terms.items()])

    def __sub__(self, other: "ScreenerElement") -> "ScreenerElement":
        if not isinstance(other, ScreenerElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Coefficient) -> "ScreenerElement":
        coeff = _coerce(self.ring, c)
        return ScreenerElement(
            self.node, self.ring, [(key, coeff * v) for key, v in self._terms.items()]
        )

    def __mul__(self, c: Coefficient) -> "ScreenerElement":
        if isinstance(c, (int, TPoly)) and not isinstance(c, bool):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"ScreenerElement(node={self.node}, ring={self.ring.value}, {self._terms!r})"

    def __str__(self) -> str:
        from qt_screening.display.render import render_screener

        return render_screener(self)


def _ring_of(x: Element[Any]) -> Ring:
    return type(x).ring


def screen_l(cd: CartanData, ring: Union[Ring, str], i: int, x: Element[Any]) -> ScreenerElement:
    """Free screening operator: m -> m * sum_k [u_{i,k}(m)]_t S_{i,k}.

    In the classical ring the coefficient is u_{i,k}(m) itself.
    """
    ring = Ring(ring)
    if _ring_of(x) is not ring:
        raise RingMismatchError(f"element of the {_ring_of(x).value} ring passed as {ring.value}")
    cd.check_node(i)
    acc: Dict[ScreenerKey, Coefficient] = {}
    for m, c in x:
        for k, u in u_profile(cd, m, i).items():
            coeff = c * u if ring is Ring.CLASSICAL else c * t_integer(u)
            key = (m, k)
            acc[key] = acc[key] + coeff if key in acc else coeff
    return ScreenerElement(i, ring, acc)


def left_action(
    cd: CartanData,
    x: Element[Any],
    s: ScreenerElement,
    bicharacter: Optional[Bicharacter] = None,
) -> ScreenerElement:
    """x * s for an element x, using the twisted product on hat monomials when given."""
    if _ring_of(x) is not s.ring:
        raise RingMismatchError("left factor and screener belong to different rings")
    b = bicharacter or Bicharacter.zero()
    acc: List[Tuple[ScreenerKey, Coefficient]] = []
    for m1, c1 in x:
        for (m2, k), c2 in s:
            coeff = c1 * c2
            if s.ring is Ring.HAT and b.kind != "zero":
                coeff = coeff.shift(2 * d_eval(cd, b, m1, m2))  # type: ignore[union-attr]
            acc.append(((m1 * m2, k), coeff))
    return ScreenerElement(s.node, s.ring, acc)


def right_action(
    cd: CartanData,
    s: ScreenerElement,
    m: Monomial,
    bicharacter: Optional[Bicharacter] = None,
) -> ScreenerElement:
    """s * m, moving each S_{i,k} to the right with S_{i,k} m = t^(2u_{i,k}(m)) m S_{i,k}."""
    if not isinstance(m, _monomial_type(s.ring)):
        raise RingMismatchError(f"cannot act on a {s.ring.value} screener by {type(m).__name__}")
    b = bicharacter or Bicharacter.zero()
    profile = u_profile(cd, m, s.node)
    acc: List[Tuple[ScreenerKey, Coefficient]] = []
    for (ms, k), c in s:
        if s.ring is Ring.CLASSICAL:
            acc.append(((ms * m, k), c))
            continue
        exp = 2 * profile.get(k, 0)
        if s.ring is Ring.HAT and b.kind != "zero":
            exp += 2 * d_eval(cd, b, ms, m)  # type: ignore[arg-type]
        acc.append(((ms * m, k), c.shift(exp)))  # type: ignore[union-attr]
    return ScreenerElement(s.node, s.ring, acc)


def right_action_element(
    cd: CartanData,
    s: ScreenerElement,
    x: Element[Any],
    bicharacter: Optional[Bicharacter] = None,
) -> ScreenerElement:
    """s * x for an element x (linear extension of right_action)."""
    result = ScreenerElement.zero(s.node, s.ring)
    for m, c in x:
        result = result + right_action(cd, s, m, bicharacter).scale(c)
    return result


# -- normal forms ------------------------------------------------------------------------


def _check_kind(kind: QuotientKind, s: ScreenerElement) -> None:
    if kind.ring is not s.ring:
        raise RingMismatchError(f"quotient {kind.value} needs the {kind.ring.value} ring, got {s.ring.value}")


def _nf_hat(cd: CartanData, s: ScreenerElement) -> ScreenerElement:
    i = s.node
    r = cd.r(i)
    acc: Dict[ScreenerKey, TPoly] = {}
    for (m, k), c in s:
        coeff = TPoly.coerce(c)
        mono: HatMonomial = m  # type: ignore[assignment]
        while mono.v_exponent(i, k - r) > 0:
            mono = mono.strip_v(i, k - r)
            coeff = coeff.shift(2 - 2 * u_profile(cd, mono, i).get(k, 0))
            k -= 2 * r
        key = (mono, k)
        acc[key] = acc[key] + coeff if key in acc else coeff
    return ScreenerElement(i, Ring.HAT, acc)


def _shift_exponent_down(kind: QuotientKind, m: YMonomial, i: int, k: int, r: int) -> int:
    # M S_k -> t^e m S_{k-2r} with m = M A_{i,k-r}
    if kind is QuotientKind.Y_F:
        return 2 - 2 * m.exponent(i, k)
    return 1 - m.exponent(i, k) + m.exponent(i, k - 2 * r)


def _shift_exponent_up(kind: QuotientKind, m: YMonomial, i: int, k: int, r: int) -> int:
    # M S_k -> t^e M A_{i,k+r}^-1 S_{k+2r}
    if kind is QuotientKind.Y_F:
        return 2 * m.exponent(i, k + 2 * r) - 2
    return m.exponent(i, k + 2 * r) - m.exponent(i, k) - 1


def _nf_anchored(cd: CartanData, kind: QuotientKind, s: ScreenerElement) -> ScreenerElement:
    i = s.node
    r = cd.r(i)
    classical = kind is QuotientKind.CLASSICAL_F
    acc: Dict[ScreenerKey, Coefficient] = {}
    for (m, k), c in s:
        mono: YMonomial = m  # type: ignore[assignment]
        anchor = k % (2 * r)
        exp = 0
        while k > anchor:
            mono = mono * a_monomial(cd, i, k - r)
            if not classical:
                exp += _shift_exponent_down(kind, mono, i, k, r)
            k -= 2 * r
        while k < anchor:
            if not classical:
                exp += _shift_exponent_up(kind, mono, i, k, r)
            mono = mono * a_inverse_monomial(cd, i, k + r)
            k += 2 * r
        coeff = c if classical else TPoly.coerce(c).shift(exp)
        key = (mono, k)
        acc[key] = acc[key] + coeff if key in acc else coeff
    return ScreenerElement(i, s.ring, acc)


def nf(cd: CartanData, kind: Union[QuotientKind, str], s: ScreenerElement) -> ScreenerElement:
    """Canonical representative of s modulo the submodule of the given kind.

    nf(s) is zero exactly when s lies in the submodule.
    """
    kind = QuotientKind(kind)
    _check_kind(kind, s)
    if not s:
        return s
    if kind is QuotientKind.HAT_F:
        result = _nf_hat(cd, s)
    else:
        result = _nf_anchored(cd, kind, s)
    logger.debug(f"nf[{kind.value}] node {s.node}: {len(s)} terms -> {len(result)} terms")
    return result


def screen(cd: CartanData, kind: Union[QuotientKind, str], i: int, x: Element[Any]) -> ScreenerElement:
    """Screening operator of the given quotient kind: nf(kind, screen_l(x))."""
    kind = QuotientKind(kind)
    return nf(cd, kind, screen_l(cd, kind.ring, i, x))


def screener_equal(
    cd: CartanData, kind: Union[QuotientKind, str], s1: ScreenerElement, s2: ScreenerElement
) -> bool:
    """Equality in the quotient."""
    return not nf(cd, kind, s1 - s2)


def submodule_generator(
    cd: CartanData, kind: Union[QuotientKind, str], i: int, m: Monomial, k: int
) -> ScreenerElement:
    """The spanning element of the submodule attached to the monomial m and a = q^k."""
    kind = QuotientKind(kind)
    r = cd.r(i)
    if kind is QuotientKind.HAT_F:
        assert isinstance(m, HatMonomial)
        upper = m * HatMonomial.vv(i, k + r)
        u_top = u_profile(cd, m, i).get(k + 2 * r, 0)
        return ScreenerElement(
            i, Ring.HAT, [((upper, k + 2 * r), TPoly.t_power(2 * u_top)), ((m, k), TPoly.t_power(2, -1))]
        )
    assert isinstance(m, YMonomial)
    lowered = m * a_inverse_monomial(cd, i, k + r)
    if kind is QuotientKind.CLASSICAL_F:
        return ScreenerElement(i, Ring.CLASSICAL, [((lowered, k + 2 * r), 1), ((m, k), -1)])
    if kind is QuotientKind.Y_F:
        top = TPoly.t_power(2 * m.exponent(i, k + 2 * r))
        return ScreenerElement(i, Ring.Y, [((lowered, k + 2 * r), top), ((m, k), TPoly.t_power(2, -1))])
    top = TPoly.t_power(m.exponent(i, k + 2 * r) - m.exponent(i, k))
    return ScreenerElement(i, Ring.Y, [((lowered, k + 2 * r), top), ((m, k), TPoly.t_power(1, -1))])


# -- involutions -------------------------------------------------------------------------


def bar_screener(
    cd: CartanData, b: Optional[Bicharacter], s: ScreenerElement
) -> ScreenerElement:
    """Involution sum U_k S_{i,k} -> sum t^-2 S_{i,k} bar(U_k), back in left-normal form.

    The hat ring uses the bar of the bicharacter b (zero when None); the Y ring ignores b.
    """
    if s.ring is Ring.CLASSICAL:
        raise RingMismatchError("the classical ring has no bar involution")
    bich = b or Bicharacter.zero()
    acc: List[Tuple[ScreenerKey, TPoly]] = []
    for (m, k), c in s:
        exp = 2 * u_profile(cd, m, s.node).get(k, 0) - 2
        if s.ring is Ring.HAT:
            exp += 2 * d_eval(cd, bich, m, m)  # type: ignore[arg-type]
        acc.append(((m, k), TPoly.coerce(c).bar().shift(exp)))
    return ScreenerElement(s.node, s.ring, acc)


# -- projections of screeners ------------------------------------------------------------


def pi_tilde_screener(cd: CartanData, s: ScreenerElement) -> ScreenerElement:
    """m S_k -> Pi~(m) S_k with t -> 1 (hat screeners to classical screeners)."""
    if s.ring is not Ring.HAT:
        raise RingMismatchError("pi_tilde_screener needs a hat screener")
    return ScreenerElement(
        s.node,
        Ring.CLASSICAL,
        [((pi_tilde_monomial(cd, m), k), TPoly.coerce(c).at_one()) for (m, k), c in s],  # type: ignore[arg-type]
    )


def hat_pi_screener(cd: CartanData, b: Bicharacter, s: ScreenerElement) -> ScreenerElement:
    """m S_k -> hat_pi_d(m) S_k (hat screeners to Y screeners)."""
    if s.ring is not Ring.HAT:
        raise RingMismatchError("hat_pi_screener needs a hat screener")
    acc: List[Tuple[ScreenerKey, TPoly]] = []
    for (m, k), c in s:
        for ym, yc in hat_pi_d(cd, b, HatElement({m: c})):  # type: ignore[dict-item]
            acc.append(((ym, k), yc))  # type: ignore[arg-type]
    return ScreenerElement(s.node, Ring.Y, acc)


def pi_t_screener(s: ScreenerElement) -> ScreenerElement:
    """t -> 1 on Y screeners."""
    if s.ring is not Ring.Y:
        raise RingMismatchError("pi_t_screener needs a Y screener")
    return ScreenerElement(
        s.node, Ring.CLASSICAL, [(key, TPoly.coerce(c).at_one()) for key, c in s]
    )


def pi_node_screener(cd: CartanData, s: ScreenerElement) -> ScreenerElement:
    """Apply the node reduction pi_i to the monomial part of a hat screener for node i."""
    if s.ring is not Ring.HAT:
        raise RingMismatchError("pi_node_screener needs a hat screener")
    acc: List[Tuple[ScreenerKey, Coefficient]] = []
    for (m, k), c in s:
        for pm, pc in pi_node(cd, s.node, HatElement({m: c})):  # type: ignore[dict-item]
            acc.append(((pm, k), pc))
    return ScreenerElement(s.node, Ring.HAT, acc)


PROJECTIONS = ("pi_tilde", "hat_pi", "pi_t", "pi_node")


def project_screener(
    cd: CartanData,
    projection: str,
    s: ScreenerElement,
    bicharacter: Optional[Bicharacter] = None,
) -> ScreenerElement:
    """Apply one of the ring maps termwise to the monomials of s, keeping the S symbols.

    projection is "pi_tilde", "hat_pi" (with the given bicharacter, zero by default), "pi_t" or
    "pi_node".
    """
    if projection == "pi_tilde":
        return pi_tilde_screener(cd, s)
    if projection == "hat_pi":
        return hat_pi_screener(cd, bicharacter or Bicharacter.zero(), s)
    if projection == "pi_t":
        return pi_t_screener(s)
    if projection == "pi_node":
        return pi_node_screener(cd, s)
    raise ValueError(f"unknown projection '{projection}', expected one of {PROJECTIONS}")


__all__ = [
    "QuotientKind",
    "ScreenerElement",
    "bar_screener",
    "hat_pi_screener",
    "left_action",
    "nf",
    "pi_node_screener",
    "pi_t_screener",
    "pi_tilde_screener",
    "project_screener",
    "PROJECTIONS",
    "right_action",
    "right_action_element",
    "screen",
    "screen_l",
    "screener_equal",
    "submodule_generator",
]
