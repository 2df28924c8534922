"""Suites for the projection diagrams, the quotient normal forms and the bar involutions."""

from typing import Any, Optional

from qt_screening.algebra.elements import Ring
from qt_screening.algebra.monomials import Monomial
from qt_screening.algebra.rings import (
    Bicharacter,
    bar_hat,
    bar_y,
    d_eval,
    hat_pi_d,
    pi_node,
    pi_t,
    pi_tilde_t,
)
from qt_screening.algebra.screening import (
    QuotientKind,
    ScreenerElement,
    bar_screener,
    hat_pi_screener,
    left_action,
    nf,
    pi_node_screener,
    pi_t_screener,
    pi_tilde_screener,
    right_action,
    screen,
    screen_l,
    submodule_generator,
)
from qt_screening.algebra.tpoly import TPoly
from qt_screening.verify.suites.base import (
    CheckContext,
    PropertyCheck,
    Suite,
    expect_equal,
    first_failure,
    mismatch,
)

T_MINUS_1 = TPoly({1: 1, 0: -1})

# -- diagrams ----------------------------------------------------------------------------


def _classical_projection(ctx: CheckContext) -> Optional[str]:
    i = ctx.sampler.node()
    x = ctx.sampler.hat_element()
    return expect_equal(
        f"Pi(S_{i}(x)) for {x}",
        pi_tilde_screener(ctx.cd, screen_l(ctx.cd, Ring.HAT, i, x)),
        screen_l(ctx.cd, Ring.CLASSICAL, i, pi_tilde_t(ctx.cd, x)),
    )


def _hat_to_y(ctx: CheckContext, b: Bicharacter) -> Optional[str]:
    i = ctx.sampler.node()
    x = ctx.sampler.hat_element()
    return expect_equal(
        f"hat_pi[{b}](S_{i}(x)) for {x}",
        hat_pi_screener(ctx.cd, b, screen_l(ctx.cd, Ring.HAT, i, x)),
        screen_l(ctx.cd, Ring.Y, i, hat_pi_d(ctx.cd, b, x)),
    )


def _hat_to_y_plain(ctx: CheckContext) -> Optional[str]:
    return _hat_to_y(ctx, Bicharacter.zero())


def _hat_to_y_nakajima(ctx: CheckContext) -> Optional[str]:
    return _hat_to_y(ctx, Bicharacter.nakajima())


def _y_to_classical(ctx: CheckContext) -> Optional[str]:
    i = ctx.sampler.node()
    y = ctx.sampler.y_element()
    return expect_equal(
        f"pi_t(S_{i}(y)) for {y}",
        pi_t_screener(screen_l(ctx.cd, Ring.Y, i, y)),
        screen_l(ctx.cd, Ring.CLASSICAL, i, pi_t(y)),
    )


def _quotient_classical_projection(ctx: CheckContext) -> Optional[str]:
    i = ctx.sampler.node()
    x = ctx.sampler.hat_element()
    projected = pi_tilde_screener(ctx.cd, screen(ctx.cd, QuotientKind.HAT_F, i, x))
    return expect_equal(
        f"Pi of the hatF screen of {x}",
        nf(ctx.cd, QuotientKind.CLASSICAL_F, projected),
        screen(ctx.cd, QuotientKind.CLASSICAL_F, i, pi_tilde_t(ctx.cd, x)),
    )


def _quotient_tower(ctx: CheckContext) -> Optional[str]:
    i = ctx.sampler.node()
    x = ctx.sampler.hat_element()
    y = ctx.sampler.y_element()
    zero = Bicharacter.zero()
    upper = hat_pi_screener(ctx.cd, zero, screen(ctx.cd, QuotientKind.HAT_F, i, x))
    lower = pi_t_screener(screen(ctx.cd, QuotientKind.Y_F, i, y))
    return first_failure(
        expect_equal(
            f"hat_pi of the hatF screen of {x}",
            nf(ctx.cd, QuotientKind.Y_F, upper),
            screen(ctx.cd, QuotientKind.Y_F, i, hat_pi_d(ctx.cd, zero, x)),
        ),
        expect_equal(
            f"pi_t of the yF screen of {y}",
            nf(ctx.cd, QuotientKind.CLASSICAL_F, lower),
            screen(ctx.cd, QuotientKind.CLASSICAL_F, i, pi_t(y)),
        ),
    )


def _quotient_primed(ctx: CheckContext) -> Optional[str]:
    i = ctx.sampler.node()
    x = ctx.sampler.hat_element()
    nakajima = Bicharacter.nakajima()
    image = hat_pi_screener(ctx.cd, nakajima, screen(ctx.cd, QuotientKind.HAT_F, i, x))
    return expect_equal(
        f"nakajima image of the hatF screen of {x}",
        nf(ctx.cd, QuotientKind.Y_F_PRIME, image),
        screen(ctx.cd, QuotientKind.Y_F_PRIME, i, hat_pi_d(ctx.cd, nakajima, x)),
    )


def _node_reduction(ctx: CheckContext) -> Optional[str]:
    i = ctx.sampler.node()
    x = ctx.sampler.hat_element()
    return expect_equal(
        f"S_{i}(pi_{i}(x)) for {x}",
        screen_l(ctx.cd, Ring.HAT, i, pi_node(ctx.cd, i, x)),
        pi_node_screener(ctx.cd, screen_l(ctx.cd, Ring.HAT, i, x)),
    )


DIAGRAMS = Suite(
    "diagrams",
    "Screening operators commute with the projections between the rings",
    (
        PropertyCheck("classical-projection", "Lemma 2", _classical_projection),
        PropertyCheck("hat-to-y", "Lemma 14", _hat_to_y_plain),
        PropertyCheck("y-to-classical", "Lemma 14", _y_to_classical),
        PropertyCheck("hat-to-y-nakajima", "Lemma 14", _hat_to_y_nakajima, simply_laced=True),
        PropertyCheck("quotient-classical-projection", "Lemma 4", _quotient_classical_projection),
        PropertyCheck("quotient-tower", "Lemma 17", _quotient_tower),
        PropertyCheck("quotient-primed", "Lemma 17", _quotient_primed, simply_laced=True),
        PropertyCheck("node-reduction", "Prop 3", _node_reduction),
    ),
)

# -- quotient ----------------------------------------------------------------------------


def _monomial_for(ctx: CheckContext, kind: QuotientKind) -> Monomial:
    if kind is QuotientKind.HAT_F:
        return ctx.sampler.hat_monomial()
    return ctx.sampler.y_monomial()


def _coefficient_for(ctx: CheckContext, kind: QuotientKind) -> Any:
    if kind is QuotientKind.CLASSICAL_F:
        return ctx.sampler.nonzero()
    return ctx.sampler.nonzero_tpoly()


def _element_for(ctx: CheckContext, kind: QuotientKind) -> Any:
    if kind is QuotientKind.HAT_F:
        return ctx.sampler.hat_element()
    if kind is QuotientKind.CLASSICAL_F:
        return ctx.sampler.classical_element()
    return ctx.sampler.y_element()


def _random_screener(ctx: CheckContext, kind: QuotientKind, i: int) -> ScreenerElement:
    """screen_l of a random element plus a few free terms."""
    s = screen_l(ctx.cd, kind.ring, i, _element_for(ctx, kind))
    extra = [
        ((_monomial_for(ctx, kind), ctx.sampler.k()), _coefficient_for(ctx, kind))
        for _ in range(ctx.sampler.rng.randint(0, 2))
    ]
    return s + ScreenerElement(i, kind.ring, extra)


def _generators_reduce(ctx: CheckContext) -> Optional[str]:
    i, k = ctx.sampler.node(), ctx.sampler.k()
    for kind in QuotientKind:
        g = submodule_generator(ctx.cd, kind, i, _monomial_for(ctx, kind), k)
        reduced = nf(ctx.cd, kind, g)
        if reduced:
            return mismatch(f"nf[{kind.value}] of generator {g}", reduced, 0)
    return None


def _representative_independent(ctx: CheckContext) -> Optional[str]:
    i = ctx.sampler.node()
    for kind in QuotientKind:
        s = _random_screener(ctx, kind, i)
        shifted = s
        for _ in range(ctx.sampler.rng.randint(1, 3)):
            g = submodule_generator(ctx.cd, kind, i, _monomial_for(ctx, kind), ctx.sampler.k())
            shifted = shifted + g.scale(_coefficient_for(ctx, kind))
        failure = expect_equal(f"nf[{kind.value}] after adding generators", nf(ctx.cd, kind, shifted), nf(ctx.cd, kind, s))
        if failure:
            return failure
    return None


def _hat_two_sided(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    i = s.node()
    choices = [Bicharacter.at_node(i)]
    if ctx.cd.is_simply_laced:
        choices.append(Bicharacter.nakajima())
    b = s.rng.choice(choices)
    g = submodule_generator(ctx.cd, QuotientKind.HAT_F, i, s.hat_monomial(), s.k())
    left = left_action(ctx.cd, s.hat_element(), g, b)
    right = right_action(ctx.cd, g, s.hat_monomial(), b)
    for side, value in (("left", left), ("right", right)):
        reduced = nf(ctx.cd, QuotientKind.HAT_F, value)
        if reduced:
            return mismatch(f"nf[hatF] of the {side} {b}-multiple of {g}", reduced, 0)
    return None


def _torsion_free(ctx: CheckContext) -> Optional[str]:
    i = ctx.sampler.node()
    for kind in (QuotientKind.HAT_F, QuotientKind.Y_F, QuotientKind.Y_F_PRIME):
        s = _random_screener(ctx, kind, i)
        if ctx.sampler.rng.random() < 0.5:
            s = s - nf(ctx.cd, kind, s)
        base = nf(ctx.cd, kind, s)
        scaled = nf(ctx.cd, kind, s.scale(T_MINUS_1))
        if bool(scaled) != bool(base):
            return f"nf[{kind.value}]: (t-1)s reduces to {scaled} while s reduces to {base}"
        failure = expect_equal(f"nf[{kind.value}]((t-1)s)", scaled, base.scale(T_MINUS_1))
        if failure:
            return failure
    return None


def _bimodule(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    i = s.node()
    b = s.bicharacter()
    sc = _random_screener(ctx, QuotientKind.HAT_F, i)
    m1, m2 = s.hat_monomial(), s.hat_monomial()
    x = s.hat_element()
    twisted = right_action(ctx.cd, sc, m1 * m2, b).scale(TPoly.t_power(2 * d_eval(ctx.cd, b, m1, m2)))
    return first_failure(
        expect_equal(
            f"(s m1) m2 under {b}",
            right_action(ctx.cd, right_action(ctx.cd, sc, m1, b), m2, b),
            twisted,
        ),
        expect_equal(
            f"x (s m1) under {b}",
            left_action(ctx.cd, x, right_action(ctx.cd, sc, m1, b), b),
            right_action(ctx.cd, left_action(ctx.cd, x, sc, b), m1, b),
        ),
    )


QUOTIENT = Suite(
    "quotient",
    "Normal forms modulo the four submodules",
    (
        PropertyCheck("generators-reduce", "Lemma 16", _generators_reduce),
        PropertyCheck("representative-independent", "Lemma 16", _representative_independent),
        PropertyCheck("hat-two-sided", "Lemma 8", _hat_two_sided),
        PropertyCheck("torsion-free", "Lemma 19", _torsion_free),
        PropertyCheck("bimodule", "Lemma 15", _bimodule),
    ),
)

# -- involution --------------------------------------------------------------------------


def _hat_bicharacter(ctx: CheckContext, i: int) -> Bicharacter:
    """A bicharacter for which the hatF submodule at node i is bar-stable."""
    choices = [Bicharacter.at_node(i)]
    if ctx.cd.is_simply_laced:
        choices.append(Bicharacter.nakajima())
    return ctx.sampler.rng.choice(choices)


def _bar_commutes_free(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    i = s.node()
    b = s.bicharacter()
    x, y = s.hat_element(), s.y_element()
    return first_failure(
        expect_equal(
            f"bar(S_{i}(x)) under {b}",
            bar_screener(ctx.cd, b, screen_l(ctx.cd, Ring.HAT, i, x)),
            screen_l(ctx.cd, Ring.HAT, i, bar_hat(ctx.cd, b, x)),
        ),
        expect_equal(
            f"bar(S_{i}(y))",
            bar_screener(ctx.cd, None, screen_l(ctx.cd, Ring.Y, i, y)),
            screen_l(ctx.cd, Ring.Y, i, bar_y(y)),
        ),
    )


def _bar_involutive(ctx: CheckContext) -> Optional[str]:
    i = ctx.sampler.node()
    b = ctx.sampler.bicharacter()
    hat = _random_screener(ctx, QuotientKind.HAT_F, i)
    y = _random_screener(ctx, QuotientKind.Y_F, i)
    return first_failure(
        expect_equal(f"bar(bar(s)) under {b}", bar_screener(ctx.cd, b, bar_screener(ctx.cd, b, hat)), hat),
        expect_equal("bar(bar(s))", bar_screener(ctx.cd, None, bar_screener(ctx.cd, None, y)), y),
    )


def _submodules_bar_stable(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    i, k = s.node(), s.k()
    b = _hat_bicharacter(ctx, i)
    g_hat = submodule_generator(ctx.cd, QuotientKind.HAT_F, i, s.hat_monomial(), k)
    g_prime = submodule_generator(ctx.cd, QuotientKind.Y_F_PRIME, i, s.y_monomial(), k)
    hat_reduced = nf(ctx.cd, QuotientKind.HAT_F, bar_screener(ctx.cd, b, g_hat))
    prime_reduced = nf(ctx.cd, QuotientKind.Y_F_PRIME, bar_screener(ctx.cd, None, g_prime))
    return first_failure(
        None if not hat_reduced else mismatch(f"nf[hatF] of bar under {b} of {g_hat}", hat_reduced, 0),
        None if not prime_reduced else mismatch(f"nf[yFprime] of bar of {g_prime}", prime_reduced, 0),
    )


def _bar_commutes_projection(ctx: CheckContext) -> Optional[str]:
    x = ctx.sampler.hat_element()
    nakajima = Bicharacter.nakajima()
    return expect_equal(
        f"bar(hat_pi(x)) for {x}",
        bar_y(hat_pi_d(ctx.cd, nakajima, x)),
        hat_pi_d(ctx.cd, nakajima, bar_hat(ctx.cd, nakajima, x)),
    )


def _bar_commutes_quotient(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    i = s.node()
    b = _hat_bicharacter(ctx, i)
    x, y = s.hat_element(), s.y_element()
    hat_side = nf(ctx.cd, QuotientKind.HAT_F, bar_screener(ctx.cd, b, screen(ctx.cd, QuotientKind.HAT_F, i, x)))
    prime_side = nf(
        ctx.cd, QuotientKind.Y_F_PRIME, bar_screener(ctx.cd, None, screen(ctx.cd, QuotientKind.Y_F_PRIME, i, y))
    )
    return first_failure(
        expect_equal(
            f"bar of the hatF screen under {b}",
            hat_side,
            screen(ctx.cd, QuotientKind.HAT_F, i, bar_hat(ctx.cd, b, x)),
        ),
        expect_equal(
            "bar of the yFprime screen",
            prime_side,
            screen(ctx.cd, QuotientKind.Y_F_PRIME, i, bar_y(y)),
        ),
    )


INVOLUTION = Suite(
    "involution",
    "Bar involutions commute with the screening operators",
    (
        PropertyCheck("bar-commutes-free", "Lemma 20", _bar_commutes_free),
        PropertyCheck("bar-involutive", "Lemma 20", _bar_involutive),
        PropertyCheck("submodules-bar-stable", "Lemma 20", _submodules_bar_stable),
        PropertyCheck("bar-commutes-projection", "Lemma 20", _bar_commutes_projection, simply_laced=True),
        PropertyCheck("bar-commutes-quotient", "Lemma 20", _bar_commutes_quotient),
    ),
)


__all__ = ["DIAGRAMS", "INVOLUTION", "QUOTIENT"]
