"""Suites for the derivation rules, the bicharacters and the Gaussian binomials."""

import math
from typing import Optional

from qt_screening.algebra.elements import HatElement, Ring
from qt_screening.algebra.monomials import HatMonomial
from qt_screening.algebra.rings import (
    Bicharacter,
    bar_hat,
    bar_y,
    d_eval,
    d_eval_alternate,
    hat_pi_d,
    pi_node,
    pi_t,
    pi_tilde_monomial,
    pi_tilde_t,
    star_mul,
    u_profile,
)
from qt_screening.algebra.screening import left_action, right_action_element, screen_l
from qt_screening.algebra.tpoly import ONE, TPoly, gauss_binom, t_integer
from qt_screening.verify.suites.base import (
    CheckContext,
    PropertyCheck,
    Suite,
    expect_equal,
    first_failure,
)

# -- leibniz -----------------------------------------------------------------------------


def _leibniz_hat(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    b = s.bicharacter()
    i = s.node()
    x, y = s.hat_element(), s.hat_element()
    lhs = screen_l(ctx.cd, Ring.HAT, i, star_mul(ctx.cd, b, x, y))
    rhs = left_action(ctx.cd, x, screen_l(ctx.cd, Ring.HAT, i, y), b) + right_action_element(
        ctx.cd, screen_l(ctx.cd, Ring.HAT, i, x), y, b
    )
    return expect_equal(f"S(x *_{b} y) at node {i}", lhs, rhs)


def _leibniz_y(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    i = s.node()
    x, y = s.y_element(), s.y_element()
    lhs = screen_l(ctx.cd, Ring.Y, i, x * y)
    rhs = left_action(ctx.cd, x, screen_l(ctx.cd, Ring.Y, i, y)) + right_action_element(
        ctx.cd, screen_l(ctx.cd, Ring.Y, i, x), y
    )
    return expect_equal(f"S(x y) at node {i}", lhs, rhs)


def _leibniz_classical(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    i = s.node()
    x, y = s.classical_element(), s.classical_element()
    lhs = screen_l(ctx.cd, Ring.CLASSICAL, i, x * y)
    rhs = left_action(ctx.cd, x, screen_l(ctx.cd, Ring.CLASSICAL, i, y)) + right_action_element(
        ctx.cd, screen_l(ctx.cd, Ring.CLASSICAL, i, x), y
    )
    return expect_equal(f"S(x y) at node {i}", lhs, rhs)


LEIBNIZ = Suite(
    "leibniz",
    "Free screening operators are derivations for the (twisted) products",
    (
        PropertyCheck("hat-twisted", "Prop 1", _leibniz_hat),
        PropertyCheck("y", "Prop 7", _leibniz_y),
        PropertyCheck("classical", "Theorem 1", _leibniz_classical),
    ),
)

# -- bicharacter -------------------------------------------------------------------------


def _d_forms_agree(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    b = s.bicharacter(allow_zero=False)
    m1, m2 = s.hat_monomial(), s.hat_monomial()
    return expect_equal(
        f"d[{b}]({m1}, {m2}) second form", d_eval_alternate(ctx.cd, b, m1, m2), d_eval(ctx.cd, b, m1, m2)
    )


def _v_pairing(ctx: CheckContext, b: Bicharacter, i: int) -> Optional[str]:
    s = ctx.sampler
    m = s.hat_monomial()
    k = s.k()
    r = ctx.cd.r(i)
    v = HatMonomial.vv(i, k + r)
    profile = u_profile(ctx.cd, m, i)
    return first_failure(
        expect_equal(f"d[{b}](V[{i},{k + r}], {m})", d_eval(ctx.cd, b, v, m), profile.get(k, 0)),
        expect_equal(
            f"d[{b}]({m}, V[{i},{k + r}])", d_eval(ctx.cd, b, m, v), profile.get(k + 2 * r, 0)
        ),
    )


def _nakajima_v_pairing(ctx: CheckContext) -> Optional[str]:
    return _v_pairing(ctx, Bicharacter.nakajima(), ctx.sampler.node())


def _node_v_pairing(ctx: CheckContext) -> Optional[str]:
    i = ctx.sampler.node()
    return _v_pairing(ctx, Bicharacter.at_node(i), i)


def _bilinear(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    b = s.bicharacter(allow_zero=False)
    m1, m2, m3 = s.hat_monomial(), s.hat_monomial(), s.hat_monomial()

    def d(x: HatMonomial, y: HatMonomial) -> int:
        return d_eval(ctx.cd, b, x, y)

    return first_failure(
        expect_equal("left additivity", d(m1 * m2, m3), d(m1, m3) + d(m2, m3)),
        expect_equal("right additivity", d(m1, m2 * m3), d(m1, m2) + d(m1, m3)),
    )


def _associative(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    b = s.bicharacter()
    x, y, z = (s.hat_element(max_terms=2, max_support=4) for _ in range(3))
    left = star_mul(ctx.cd, b, star_mul(ctx.cd, b, x, y), z)
    right = star_mul(ctx.cd, b, x, star_mul(ctx.cd, b, y, z))
    return expect_equal(f"(x * y) * z under {b}", left, right)


def _u_additive(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    i = s.node()
    m1, m2 = s.hat_monomial(), s.hat_monomial()
    p1, p2 = u_profile(ctx.cd, m1, i), u_profile(ctx.cd, m2, i)
    expected = {k: p1.get(k, 0) + p2.get(k, 0) for k in set(p1) | set(p2)}
    return expect_equal(
        f"u_{i}(m1 m2)", u_profile(ctx.cd, m1 * m2, i), {k: u for k, u in expected.items() if u}
    )


def _pi_node_keeps_u(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    i = s.node()
    m = s.hat_monomial()
    (image,) = pi_node(ctx.cd, i, HatElement({m: 1})).monomials()
    return expect_equal(f"u_{i}(pi_{i}({m}))", u_profile(ctx.cd, image, i), u_profile(ctx.cd, m, i))


def _pi_tilde_keeps_u(ctx: CheckContext) -> Optional[str]:
    m = ctx.sampler.hat_monomial()
    image = pi_tilde_monomial(ctx.cd, m)
    for j in ctx.cd.nodes:
        failure = expect_equal(
            f"exponents of Pi({m}) at node {j}", u_profile(ctx.cd, image, j), u_profile(ctx.cd, m, j)
        )
        if failure:
            return failure
    return None


def _specializations_agree(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    b = s.bicharacter()
    x = s.hat_element()
    return expect_equal(
        f"pi_t(hat_pi[{b}](x))", pi_t(hat_pi_d(ctx.cd, b, x)), pi_tilde_t(ctx.cd, x)
    )


def _bar_antimultiplicative(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    b = s.bicharacter()
    x, y = s.hat_element(), s.hat_element()
    left = bar_hat(ctx.cd, b, star_mul(ctx.cd, b, x, y))
    right = star_mul(ctx.cd, b, bar_hat(ctx.cd, b, y), bar_hat(ctx.cd, b, x))
    return expect_equal(f"bar(x * y) under {b}", left, right)


def _bar_involutive(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    b = s.bicharacter()
    x = s.hat_element()
    y = s.y_element()
    return first_failure(
        expect_equal(f"bar(bar(x)) under {b}", bar_hat(ctx.cd, b, bar_hat(ctx.cd, b, x)), x),
        expect_equal("bar(bar(y))", bar_y(bar_y(y)), y),
    )


BICHARACTER = Suite(
    "bicharacter",
    "Pairings, twisted products, projections and bar involutions on monomials",
    (
        PropertyCheck("d-forms-agree", "Lemma 9", _d_forms_agree),
        PropertyCheck("nakajima-v-pairing", "Lemma 5", _nakajima_v_pairing, simply_laced=True),
        PropertyCheck("node-v-pairing", "Lemma 9", _node_v_pairing),
        PropertyCheck("bilinear", "Lemma 3", _bilinear),
        PropertyCheck("associative", "Lemma 3", _associative),
        PropertyCheck("u-additive", "Lemma 3", _u_additive),
        PropertyCheck("pi-node-keeps-u", "Prop 3", _pi_node_keeps_u),
        PropertyCheck("pi-tilde-keeps-u", "Lemma 16", _pi_tilde_keeps_u),
        PropertyCheck("specializations-agree", "Lemma 14", _specializations_agree),
        PropertyCheck("bar-antimultiplicative", "Lemma 20", _bar_antimultiplicative),
        PropertyCheck("bar-involutive", "Lemma 20", _bar_involutive),
    ),
)

# -- binom -------------------------------------------------------------------------------

MAX_P = 12


def _sym_factorial(n: int) -> TPoly:
    result = ONE
    for k in range(1, n + 1):
        result = result * t_integer(k).shift(-(k - 1))
    return result


def _pascal_identity(ctx: CheckContext) -> Optional[str]:
    for p in range(1, MAX_P + 1):
        for r in range(0, p + 2):
            left = gauss_binom(p, r).shift(r * (p - r)) + gauss_binom(p, r - 1).shift(
                (r - 1) * (p - r + 1) + 2 * p - 2 * r + 2
            )
            right = gauss_binom(p + 1, r).shift(r * (p + 1 - r))
            if left != right:
                return expect_equal(f"recursion at p={p}, r={r}", left, right)
    return None


def _bar_invariant(ctx: CheckContext) -> Optional[str]:
    for n in range(MAX_P + 1):
        for r in range(n + 1):
            value = gauss_binom(n, r)
            if value.bar() != value:
                return expect_equal(f"bar([{n},{r}])", value.bar(), value)
    return None


def _classical_limit(ctx: CheckContext) -> Optional[str]:
    for n in range(MAX_P + 1):
        for r in range(n + 1):
            if gauss_binom(n, r).at_one() != math.comb(n, r):
                return expect_equal(f"[{n},{r}] at t=1", gauss_binom(n, r).at_one(), math.comb(n, r))
    return None


def _factorial_formula(ctx: CheckContext) -> Optional[str]:
    for n in range(MAX_P + 1):
        for r in range(n + 1):
            left = gauss_binom(n, r) * _sym_factorial(r) * _sym_factorial(n - r)
            if left != _sym_factorial(n):
                return expect_equal(f"[{n},{r}] [{r}]! [{n - r}]!", left, _sym_factorial(n))
    return None


def _t_integer_additive(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    a, b = s.rng.randint(-8, 8), s.rng.randint(-8, 8)
    return expect_equal(
        f"[{a}+{b}]", t_integer(a + b), t_integer(b) + t_integer(a).shift(2 * b)
    )


BINOM = Suite(
    "binom",
    "Gaussian binomials and t-integers",
    (
        PropertyCheck("pascal-identity", "Lemma 6", _pascal_identity, samples=1),
        PropertyCheck("bar-invariant", "Lemma 6", _bar_invariant, samples=1),
        PropertyCheck("classical-limit", "Lemma 6", _classical_limit, samples=1),
        PropertyCheck("factorial-formula", "Lemma 6", _factorial_formula, samples=1),
        PropertyCheck("t-integer-additive", "Prop 1", _t_integer_additive),
    ),
)


__all__ = ["BICHARACTER", "BINOM", "LEIBNIZ"]
