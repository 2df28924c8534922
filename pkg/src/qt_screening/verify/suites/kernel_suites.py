"""Kernel membership suites and the A-order suite."""

from functools import partial
from typing import Any, Dict, Optional, Tuple

from qt_screening.algebra.cartan import a_inverse_monomial, a_support_window, load_cartan
from qt_screening.algebra.elements import ClassicalElement, Element, YElement
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
    reconstruct,
)
from qt_screening.algebra.lattice import SpectralIndex, Window
from qt_screening.algebra.monomials import HatMonomial, Monomial, YMonomial
from qt_screening.algebra.rings import (
    Bicharacter,
    Relation,
    a_product,
    hat_pi_d,
    is_dominant,
    order_le,
    pi_t,
    pi_tilde_monomial,
)
from qt_screening.algebra.screening import QuotientKind, screen
from qt_screening.algebra.tpoly import ONE, TPoly, divide_by_t_minus_1, is_divisible_by_t_minus_1
from qt_screening.verify.suites.base import (
    CheckContext,
    PropertyCheck,
    Suite,
    expect_equal,
    first_failure,
    mismatch,
)

T_MINUS_1 = TPoly({1: 1, 0: -1})


def _dominant(ctx: CheckContext, i: int, flavor: Flavor) -> Monomial:
    if flavor is Flavor.HAT:
        return ctx.sampler.dominant_hat(i)
    return ctx.sampler.dominant_y(i)


def _coefficient(ctx: CheckContext, flavor: Flavor) -> Any:
    if flavor is Flavor.CLASSICAL:
        return ctx.sampler.nonzero()
    return ctx.sampler.nonzero_tpoly()


def _random_element(ctx: CheckContext, flavor: Flavor) -> Element[Any]:
    if flavor is Flavor.HAT:
        return ctx.sampler.hat_element(bounded=True)
    if flavor is Flavor.CLASSICAL:
        return ctx.sampler.classical_element()
    return ctx.sampler.y_element()


def _span_element(ctx: CheckContext, i: int, flavor: Flavor) -> Element[Any]:
    """Random combination of one to three generators."""
    total: Optional[Element[Any]] = None
    for _ in range(ctx.sampler.rng.randint(1, 3)):
        part = generator(ctx.cd, i, _dominant(ctx, i, flavor), flavor).scale(_coefficient(ctx, flavor))
        total = part if total is None else total + part
    assert total is not None
    return total


# -- shared kernel properties ------------------------------------------------------------


def _span_killed(ctx: CheckContext, flavor: Flavor) -> Optional[str]:
    i = ctx.sampler.node()
    x = _span_element(ctx, i, flavor)
    image = screen(ctx.cd, flavor.quotient, i, x)
    return None if not image else mismatch(f"screen[{flavor.quotient.value}] at node {i} of {x}", image, 0)


def _nonmember_detected(ctx: CheckContext, flavor: Flavor) -> Optional[str]:
    i = ctx.sampler.node()
    x = _random_element(ctx, flavor)
    if decompose(ctx.cd, i, x, flavor).is_member:
        ctx.skip("sampled element lies in the kernel module")
    if not screen(ctx.cd, flavor.quotient, i, x):
        return f"{x} has a non-dominant remainder at node {i} but screen[{flavor.quotient.value}] is 0"
    return None


def _routes_agree(ctx: CheckContext, flavor: Flavor) -> Optional[str]:
    i = ctx.sampler.node()
    x = _span_element(ctx, i, flavor)
    if ctx.sampler.rng.random() < 0.5:
        x = x + _random_element(ctx, flavor)
    member = in_kernel_module(ctx.cd, i, x, flavor)
    nf_member = not screen(ctx.cd, flavor.quotient, i, x)
    if member != nf_member:
        return f"node {i}, {x}: decomposition says {member}, normal form says {nf_member}"
    return None


def _decompose_exact(ctx: CheckContext, flavor: Flavor) -> Optional[str]:
    i = ctx.sampler.node()
    x = _span_element(ctx, i, flavor) + _random_element(ctx, flavor)
    dec = decompose(ctx.cd, i, x, flavor)
    dominant_left = [m for m in (dec.remainder or x.zero()).monomials() if is_dominant(ctx.cd, m, i)]
    if dominant_left:
        return f"remainder at node {i} still holds dominant monomials {[str(m) for m in dominant_left]}"
    return expect_equal(f"reconstruct(decompose({x}))", reconstruct(ctx.cd, dec), x)


def _kernel_checks(flavor: Flavor, anchor: str) -> Tuple[PropertyCheck, ...]:
    return (
        PropertyCheck("span-killed", anchor, partial(_span_killed, flavor=flavor)),
        PropertyCheck("nonmember-detected", anchor, partial(_nonmember_detected, flavor=flavor)),
        PropertyCheck("routes-agree", anchor, partial(_routes_agree, flavor=flavor)),
        PropertyCheck("decompose-exact", "Lemma 1", partial(_decompose_exact, flavor=flavor)),
    )


# -- kernel-hat --------------------------------------------------------------------------


def _hat_image_in_kernel(ctx: CheckContext) -> Optional[str]:
    i = ctx.sampler.node()
    x = _span_element(ctx, i, Flavor.HAT)
    image = screen(ctx.cd, QuotientKind.Y_F, i, hat_pi_d(ctx.cd, Bicharacter.zero(), x))
    if image:
        return mismatch(f"screen[yF] of the image of {x}", image, 0)
    if ctx.cd.is_simply_laced:
        twisted = screen(ctx.cd, QuotientKind.Y_F_PRIME, i, hat_pi_d(ctx.cd, Bicharacter.nakajima(), x))
        if twisted:
            return mismatch(f"screen[yFprime] of the nakajima image of {x}", twisted, 0)
    return None


KERNEL_HAT = Suite(
    "kernel-hat",
    "Kernel of the hat screening operators is spanned by the E_i(m)",
    _kernel_checks(Flavor.HAT, "Theorem 2")
    + (PropertyCheck("image-in-kernel", "Prop 8", _hat_image_in_kernel),),
)

# -- kernel-y ----------------------------------------------------------------------------


def e0_from_hat(ctx: CheckContext, i: int, m: YMonomial) -> YElement:
    """E_{0,i}(m) rebuilt as (m / Pi(m')) * Pi(E_i(m')) with m' = prod W_{i,k}^{u_k}."""
    top = HatMonomial.from_mappings(
        w={SpectralIndex(i, k): u for k, u in m.node_profile(i).items()}
    )
    rest = YElement({m / pi_tilde_monomial(ctx.cd, top): ONE})
    return rest * hat_pi_d(ctx.cd, Bicharacter.zero(), e_hat(ctx.cd, i, top))


def _e0_from_hat(ctx: CheckContext) -> Optional[str]:
    i = ctx.sampler.node()
    m = ctx.sampler.dominant_y(i)
    return expect_equal(f"E_0,{i}({m})", e0(ctx.cd, i, m), e0_from_hat(ctx, i, m))


def fundamental_element(ctx: CheckContext, k: int) -> Optional[YElement]:
    """The character of the first fundamental module starting at Y[1,k] (sl2 and A2 only)."""
    if ctx.cd == load_cartan("sl2"):
        return YElement({YMonomial.y(1, k): ONE, YMonomial.y(1, k + 2, -1): ONE})
    if ctx.cd == load_cartan("A2"):
        return YElement(
            {
                YMonomial.y(1, k): ONE,
                YMonomial.y(1, k + 2, -1) * YMonomial.y(2, k + 1): ONE,
                YMonomial.y(2, k + 3, -1): ONE,
            }
        )
    return None


def _kt_matches_screens(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    x = fundamental_element(ctx, s.k()) if ctx.index % 4 == 0 else None
    known_member = x is not None
    if x is None:
        x = s.y_element()
    for flavor in (Flavor.Y, Flavor.Y_PRIME):
        member = in_kt(ctx.cd, x, flavor)
        screens_vanish = all(not screen(ctx.cd, flavor.quotient, j, x) for j in ctx.cd.nodes)
        if member != screens_vanish:
            return f"in_kt[{flavor.value}]({x}) = {member} but all screens vanish = {screens_vanish}"
        if known_member and not member:
            return f"in_kt[{flavor.value}] rejects the fundamental character {x}"
    return None


KERNEL_Y = Suite(
    "kernel-y",
    "Kernels of the Y screening operators, unprimed and primed",
    _kernel_checks(Flavor.Y, "Theorem 3")
    + tuple(
        PropertyCheck(f"prime-{prop.name}", "Lemma 13", prop.check)
        for prop in _kernel_checks(Flavor.Y_PRIME, "Lemma 13")
    )
    + (
        PropertyCheck("e0-from-hat", "Prop 8", _e0_from_hat),
        PropertyCheck("kt-matches-screens", "Theorem 3", _kt_matches_screens),
    ),
)

# -- kernel-classical --------------------------------------------------------------------


def _classical_ring_generators(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    i = s.node()
    r = ctx.cd.r(i)
    x = ClassicalElement.scalar(1)
    for _ in range(s.rng.randint(1, 2)):
        b = s.k()
        factor = ClassicalElement(
            {YMonomial.y(i, b): 1, YMonomial.y(i, b) * a_inverse_monomial(ctx.cd, i, b + r): 1}
        )
        x = x * factor
    others = {idx: e for idx, e in s.y_monomial().exponents if idx.node != i}
    x = x * ClassicalElement({YMonomial.from_mapping(others): s.nonzero()})
    return first_failure(
        None if not screen(ctx.cd, QuotientKind.CLASSICAL_F, i, x) else f"screen[classicalF] of {x} is not 0",
        None if in_kernel_module(ctx.cd, i, x, Flavor.CLASSICAL) else f"{x} not in the classical span",
    )


def _classical_limit(ctx: CheckContext) -> Optional[str]:
    i = ctx.sampler.node()
    m = ctx.sampler.dominant_y(i)
    return expect_equal(f"E_0,{i}({m}) at t=1", pi_t(e0(ctx.cd, i, m)), e_classical(ctx.cd, i, m))


KERNEL_CLASSICAL = Suite(
    "kernel-classical",
    "Kernel of the classical screening operators",
    _kernel_checks(Flavor.CLASSICAL, "Theorem 1")
    + (
        PropertyCheck("ring-generators", "Theorem 1", _classical_ring_generators),
        PropertyCheck("classical-limit", "Prop 8", _classical_limit),
    ),
)

# -- order -------------------------------------------------------------------------------


def _lowering(ctx: CheckContext) -> Dict[SpectralIndex, int]:
    s = ctx.sampler
    v: Dict[SpectralIndex, int] = {}
    for _ in range(s.rng.randint(1, 3)):
        idx = SpectralIndex(s.node(), s.k())
        v[idx] = v.get(idx, 0) + s.rng.randint(1, 2)
    return v


def _window_for(ctx: CheckContext, v: Dict[SpectralIndex, int], *monomials: YMonomial) -> Window:
    points = [idx.k for m in monomials for idx in m.support()]
    for idx in v:
        w = a_support_window(ctx.cd, idx.node, idx.k)
        points.extend([w.kmin, w.kmax])
    return Window.enclosing(points, pad=1)


def _certificate_roundtrip(ctx: CheckContext) -> Optional[str]:
    v = _lowering(ctx)
    m2 = ctx.sampler.y_monomial()
    m1 = m2 * a_product(ctx.cd, {idx: -e for idx, e in v.items()})
    result = order_le(ctx.cd, m1, m2, _window_for(ctx, v, m1, m2))
    if result.relation is not Relation.LE:
        return f"{m1} vs {m2}: expected le, got {result.relation.value}"
    return expect_equal("certificate", result.certificate, v)


def _antisymmetric(ctx: CheckContext) -> Optional[str]:
    v = _lowering(ctx)
    m2 = ctx.sampler.y_monomial()
    m1 = m2 * a_product(ctx.cd, {idx: -e for idx, e in v.items()})
    window = _window_for(ctx, v, m1, m2)
    reverse = order_le(ctx.cd, m2, m1, window)
    if reverse.relation is not Relation.GE:
        return f"{m2} vs {m1}: expected ge, got {reverse.relation.value}"
    same = order_le(ctx.cd, m1, m1, window)
    return first_failure(
        expect_equal("reverse certificate", reverse.certificate, v),
        expect_equal("m vs m", same.relation, Relation.EQUAL),
    )


def _specialization_kernel(ctx: CheckContext) -> Optional[str]:
    x = ctx.sampler.y_element()
    if ctx.sampler.rng.random() < 0.5:
        x = x.scale(T_MINUS_1)
    divisible = all(is_divisible_by_t_minus_1(c) for _, c in x)
    if (not pi_t(x)) != divisible:
        return f"pi_t({x}) = {pi_t(x)} while divisibility by t-1 is {divisible}"
    if divisible:
        quotient = YElement((m, divide_by_t_minus_1(c)) for m, c in x)
        return expect_equal("(t-1) * (x / (t-1))", quotient.scale(T_MINUS_1), x)
    return None


def _alpha_matches_prime(ctx: CheckContext) -> Optional[str]:
    i = ctx.sampler.node()
    m = ctx.sampler.dominant_y(i)
    primed = e0_prime(ctx.cd, i, m)
    for big_m, c in e0(ctx.cd, i, m):
        expected = TPoly.coerce(c).shift(-alpha(ctx.cd, i, m, big_m))
        if primed.coefficient(big_m) != expected:
            return mismatch(f"coefficient of {big_m} in E'_0,{i}({m})", primed.coefficient(big_m), expected)
    return None


ORDER = Suite(
    "order",
    "The order generated by A^-1, its certificates and the kernel of t -> 1",
    (
        PropertyCheck("certificate-roundtrip", "Lemma 10", _certificate_roundtrip),
        PropertyCheck("antisymmetric", "Lemma 10", _antisymmetric),
        PropertyCheck("specialization-kernel", "Corollary 1", _specialization_kernel),
        PropertyCheck("alpha-matches-prime", "Lemma 13", _alpha_matches_prime),
    ),
)


__all__ = [
    "KERNEL_CLASSICAL",
    "KERNEL_HAT",
    "KERNEL_Y",
    "ORDER",
    "e0_from_hat",
    "fundamental_element",
]
