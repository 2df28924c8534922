"""Kernel generators, dominance decomposition, kernel membership and star factorizations.

The generator attached to an i-dominant monomial m is

    E(m) = m * prod_k sum_{r=0..u_k} t^(r(u_k - r)) [u_k, r]_t X_{k + r_i}^r,   u_k = u_{i,q^k}(m)

with X = V_i in the hat ring and X = A_i^-1 in the Y ring. The primed Y generator rescales each
term m * prod A^-r by t^-alpha(r).
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple, Union

from qt_screening.algebra.cartan import CartanData, a_inverse_monomial
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
    Relation,
    comparison_window,
    is_all_dominant,
    is_dominant,
    order_le,
    star_product,
    u_profile,
    wt_i,
)
from qt_screening.algebra.screening import QuotientKind
from qt_screening.algebra.tpoly import ONE, TPoly, gauss_binom
from qt_screening.errors import (
    CartanError,
    NonDominantError,
    NotInOrderError,
    RingMismatchError,
)

logger = logging.getLogger(__name__)


class Flavor(str, Enum):
    """Which family of generators spans the kernel module."""

    HAT = "hat"
    Y = "y"
    Y_PRIME = "yprime"
    CLASSICAL = "classical"

    @property
    def ring(self) -> Ring:
        if self is Flavor.HAT:
            return Ring.HAT
        if self is Flavor.CLASSICAL:
            return Ring.CLASSICAL
        return Ring.Y

    @property
    def quotient(self) -> QuotientKind:
        """Quotient whose screening operator has this kernel."""
        return {
            Flavor.HAT: QuotientKind.HAT_F,
            Flavor.Y: QuotientKind.Y_F,
            Flavor.Y_PRIME: QuotientKind.Y_F_PRIME,
            Flavor.CLASSICAL: QuotientKind.CLASSICAL_F,
        }[self]


# -- generators --------------------------------------------------------------------------


def _require_dominant(cd: CartanData, i: int, m: Monomial) -> Dict[int, int]:
    cd.check_node(i)
    profile = u_profile(cd, m, i)
    negative = {k: u for k, u in profile.items() if u < 0}
    if negative:
        raise NonDominantError(f"monomial is not {i}-dominant: negative weights at k={sorted(negative)}")
    return profile


def _binomial_sum(u: int) -> List[Tuple[int, TPoly]]:
    return [(r, gauss_binom(u, r).shift(r * (u - r))) for r in range(u + 1)]


def e_hat(cd: CartanData, i: int, m: HatMonomial) -> HatElement:
    """E_i(m) in the hat ring.

    Raises:
        NonDominantError: if some u_{i,q^k}(m) < 0
    """
    profile = _require_dominant(cd, i, m)
    r_i = cd.r(i)
    result = HatElement({m: ONE})
    for k, u in profile.items():
        result = result * HatElement(
            (HatMonomial.vv(i, k + r_i, r), c) for r, c in _binomial_sum(u)
        )
    return result


def _y_terms(cd: CartanData, i: int, m: YMonomial) -> List[Tuple[YMonomial, TPoly, Dict[int, int]]]:
    # (monomial, coefficient, A-exponents r_a keyed by the A center a)
    profile = _require_dominant(cd, i, m)
    r_i = cd.r(i)
    terms: List[Tuple[YMonomial, TPoly, Dict[int, int]]] = [(m, ONE, {})]
    for k, u in profile.items():
        a = k + r_i
        lowering = a_inverse_monomial(cd, i, a)
        expanded = []
        for mono, c, rv in terms:
            for r, binom in _binomial_sum(u):
                expanded.append((mono * lowering**r, c * binom, {**rv, a: r} if r else rv))
        terms = expanded
    return terms


def e0(cd: CartanData, i: int, m: YMonomial) -> YElement:
    """E_{0,i}(m) in the Y ring.

    Raises:
        NonDominantError: if some u_{i,q^k}(m) < 0
    """
    return YElement((mono, c) for mono, c, _ in _y_terms(cd, i, m))


def e_classical(cd: CartanData, i: int, m: YMonomial) -> ClassicalElement:
    """E_{0,i}(m) at t = 1 (ordinary binomial coefficients)."""
    return ClassicalElement((mono, c.at_one()) for mono, c, _ in _y_terms(cd, i, m))


def _alpha_from_exponents(cd: CartanData, i: int, m: YMonomial, rv: Dict[int, int]) -> int:
    r_i = cd.r(i)
    return sum(
        r * (m.exponent(i, a - r_i) + m.exponent(i, a + r_i) - r - rv.get(a - 2 * r_i, 0))
        for a, r in rv.items()
    )


def alpha(cd: CartanData, i: int, m: YMonomial, big_m: YMonomial) -> int:
    """alpha(m, M) = sum_a r_a (u_{i,a q_i^-1}(m) + u_{i,a q_i}(m) - r_a - r_{a q_i^-2}).

    The exponents r_a are read from the order certificate M = m * prod_a A_{i,a}^{-r_a}.

    Raises:
        NotInOrderError: if M is not of that form with r_a >= 0 on node i
    """
    cd.check_node(i)
    result = order_le(cd, big_m, m, comparison_window(cd, m, big_m))
    if result.relation is Relation.EQUAL:
        return 0
    if result.relation is not Relation.LE:
        raise NotInOrderError(f"M is not below m (relation {result.relation.value})")
    off_node = [idx for idx in result.certificate if idx.node != i]
    if off_node:
        raise NotInOrderError(f"M/m involves A-factors off node {i}: {[tuple(x) for x in off_node]}")
    rv = {idx.k: e for idx, e in result.certificate.items()}
    return _alpha_from_exponents(cd, i, m, rv)


def e0_prime(cd: CartanData, i: int, m: YMonomial) -> YElement:
    """E'_{0,i}(m): each term lambda_M M of E_{0,i}(m) rescaled by t^-alpha(m, M)."""
    return YElement(
        (mono, c.shift(-_alpha_from_exponents(cd, i, m, rv))) for mono, c, rv in _y_terms(cd, i, m)
    )


def generator(cd: CartanData, i: int, m: Monomial, flavor: Union[Flavor, str]) -> Element[Any]:
    """The kernel generator of the given flavor at m."""
    flavor = Flavor(flavor)
    if flavor is Flavor.HAT:
        if not isinstance(m, HatMonomial):
            raise RingMismatchError("the hat flavor needs a HatMonomial")
        return e_hat(cd, i, m)
    if not isinstance(m, YMonomial):
        raise RingMismatchError(f"the {flavor.value} flavor needs a YMonomial")
    if flavor is Flavor.Y:
        return e0(cd, i, m)
    if flavor is Flavor.Y_PRIME:
        return e0_prime(cd, i, m)
    return e_classical(cd, i, m)


# -- decomposition -----------------------------------------------------------------------


@dataclass
class Decomposition:
    """x = sum over dominant_part of lambda_m E(m) + remainder."""

    node: int
    flavor: Flavor
    dominant_part: Dict[Monomial, Coefficient] = field(default_factory=dict)
    remainder: Optional[Element[Any]] = None

    @property
    def is_member(self) -> bool:
        return not self.remainder


def decompose(
    cd: CartanData, i: int, x: Element[Any], flavor: Union[Flavor, str]
) -> Decomposition:
    """Split x into the span of the kernel generators and non-dominant monomials.

    Dominant monomials are peeled by descending i-weight, ties by the canonical monomial order.
    """
    flavor = Flavor(flavor)
    if type(x).ring is not flavor.ring:
        raise RingMismatchError(
            f"flavor {flavor.value} works in the {flavor.ring.value} ring, got {type(x).ring.value}"
        )
    cd.check_node(i)
    residual: Dict[Monomial, Coefficient] = dict(x.terms())
    # (i-weight, monomial) of the dominant monomials still in the residual
    keys: Dict[Monomial, Tuple[int, Monomial]] = {}

    def track(m: Monomial) -> None:
        if m not in keys and is_dominant(cd, m, i):
            keys[m] = (wt_i(cd, m, i), m)

    for m in residual:
        track(m)
    dominant: Dict[Monomial, Coefficient] = {}
    while keys:
        weight, top = max(keys.values())
        coeff = residual[top]
        dominant[top] = coeff
        for mono, c in generator(cd, i, top, flavor):
            value = residual.get(mono, 0) - coeff * c
            if value:
                residual[mono] = value
                track(mono)
            else:
                residual.pop(mono, None)
                keys.pop(mono, None)
        logger.debug(f"decompose[{flavor.value}] node {i}: peeled weight {weight}")
    return Decomposition(i, flavor, dict(sorted(dominant.items())), type(x)(residual))


def reconstruct(cd: CartanData, dec: Decomposition) -> Element[Any]:
    """sum lambda_m E(m) + remainder."""
    total = dec.remainder
    for m, c in dec.dominant_part.items():
        part = generator(cd, dec.node, m, dec.flavor).scale(c)
        total = part if total is None else total + part
    if total is None:
        raise ValueError("empty decomposition has no ring")
    return total


def in_kernel_module(cd: CartanData, i: int, x: Element[Any], flavor: Union[Flavor, str]) -> bool:
    """True iff x lies in the span of the flavor's generators at node i."""
    return decompose(cd, i, x, flavor).is_member


def maximal_monomials(cd: CartanData, x: Element[Any]) -> List[YMonomial]:
    """Support monomials of x with no strictly larger support monomial."""
    support: List[YMonomial] = x.monomials()
    result: List[YMonomial] = []
    for m in support:
        maximal = True
        for other in support:
            if other == m:
                continue
            relation = order_le(cd, m, other, comparison_window(cd, m, other)).relation
            if relation is Relation.LE:
                maximal = False
                break
        if maximal:
            result.append(m)
    return result


def kt_witness(cd: CartanData, x: YElement) -> Optional[YMonomial]:
    """A maximal monomial of x that fails dominance at some node, if any.

    Elements of the intersection over all nodes have only all-dominant maximal monomials.
    """
    for m in maximal_monomials(cd, x):
        if not is_all_dominant(cd, m):
            return m
    return None


def in_kt(cd: CartanData, x: YElement, flavor: Union[Flavor, str] = Flavor.Y) -> bool:
    """Membership in the intersection of the kernel modules over all nodes."""
    flavor = Flavor(flavor)
    if flavor not in (Flavor.Y, Flavor.Y_PRIME):
        raise RingMismatchError("in_kt works with the y or yprime flavor")
    if x.is_scalar():
        return True
    witness = kt_witness(cd, x)
    if witness is not None:
        logger.info(f"in_kt: maximal monomial {witness} is not dominant for every node")
        return False
    return all(in_kernel_module(cd, i, x, flavor) for i in cd.nodes)


# -- star factorization of E_i(m) -------------------------------------------------------


@dataclass
class Prop4Result:
    """Outcome of comparing the ordered star product against E_i(m)."""

    node: int
    monomial: HatMonomial
    beta: Optional[int]
    matches: bool
    factor_count: int
    first_difference: Optional[Tuple[HatMonomial, TPoly, TPoly]] = None
    message: str = ""


def _z_sequence(cd: CartanData, i: int, m: HatMonomial, k: int) -> List[HatMonomial]:
    seq = [HatMonomial.ww(i, k)] * m.w_exponent(i, k)
    for j in cd.nodes:
        if j != i and cd.c(j, i) == -1:
            seq.extend([HatMonomial.vv(j, k)] * m.v_exponent(j, k))
    return seq


def prop4_factors(cd: CartanData, i: int, m: HatMonomial) -> List[HatElement]:
    """Ordered factors of the star factorization of E_i(m) (simply-laced data)."""
    profile = _require_dominant(cd, i, m)
    factors: List[HatElement] = []
    for idx, e in m.w:
        if idx.node != i:
            factors.extend([HatElement({HatMonomial.ww(*idx): 1})] * e)
    for idx, e in m.v:
        if idx.node != i and cd.c(idx.node, i) == 0:
            factors.extend([HatElement({HatMonomial.vv(*idx): 1})] * e)

    points = [idx.k for idx in m.support() if idx.node == i or cd.c(idx.node, i) == -1]
    if not points:
        return factors
    lo, hi = min(points) - 2, max(points) + 2
    z = {k: _z_sequence(cd, i, m, k) for k in range(lo, hi + 1)}
    for parity in (0, 1):
        for k in range(lo, hi + 1):
            if k % 2 != parity:
                continue
            u_k = profile.get(k, 0)
            v_up = m.v_exponent(i, k + 1)
            raise_v = HatMonomial.vv(i, k + 1)
            for l in range(u_k):
                factors.append(
                    HatElement({z[k][l]: 1}) * HatElement({HatMonomial(): 1, raise_v: 1})
                )
            offset = profile.get(k + 2, 0) + m.v_exponent(i, k + 3)
            for l in range(v_up):
                factors.append(HatElement({z[k][u_k + l] * raise_v * z[k + 2][offset + l]: 1}))
    return factors


def verify_prop4(cd: CartanData, i: int, m: HatMonomial) -> Prop4Result:
    """Compare the ordered star product of prop4_factors with E_i(m) up to a power of t."""
    if not cd.is_simply_laced:
        raise CartanError(f"the star factorization check needs a simply-laced datum, got {cd}")
    factors = prop4_factors(cd, i, m)
    product = star_product(cd, Bicharacter.nakajima(), factors)
    expected = e_hat(cd, i, m)
    lead = TPoly.coerce(product.coefficient(m))
    if not lead.is_monomial():
        return Prop4Result(
            i,
            m,
            None,
            False,
            len(factors),
            (m, lead, ONE),
            f"coefficient of the monomial itself is {lead}, not a power of t",
        )
    beta = lead.min_degree
    scaled = expected.scale(TPoly.t_power(beta))
    if product == scaled:
        return Prop4Result(i, m, beta, True, len(factors))
    diff = product - scaled
    first = diff.monomials()[0]
    got = TPoly.coerce(product.coefficient(first))
    want = TPoly.coerce(scaled.coefficient(first))
    logger.warning(f"star factorization mismatch at node {i}: first difference at {first}")
    return Prop4Result(i, m, beta, False, len(factors), (first, got, want), "product differs")


def lemma7_sides(
    cd: CartanData, i: int, m: HatMonomial, k: int, power: int
) -> Tuple[HatElement, HatElement]:
    """([m(1 + V_{i,q^(k+1)})]^{*power}, m^power sum_r t^(r(power-r)) [power, r]_t V^r) for nakajima."""
    base = HatElement({m: 1, m * HatMonomial.vv(i, k + 1): 1})
    left = star_product(cd, Bicharacter.nakajima(), [base] * power)
    right = HatElement(
        (m**power * HatMonomial.vv(i, k + 1, r), c) for r, c in _binomial_sum(power)
    )
    return left, right


__all__ = [
    "Decomposition",
    "Flavor",
    "Prop4Result",
    "alpha",
    "decompose",
    "e0",
    "e0_prime",
    "e_classical",
    "e_hat",
    "generator",
    "in_kernel_module",
    "in_kt",
    "kt_witness",
    "lemma7_sides",
    "maximal_monomials",
    "prop4_factors",
    "reconstruct",
    "verify_prop4",
]
