"""Suites for the star factorization of E_i(m), the star powers and the primed generators."""

from typing import Any, Dict, List, Optional, Tuple

from qt_screening.algebra.cartan import load_cartan
from qt_screening.algebra.elements import Ring
from qt_screening.algebra.kernels import Prop4Result, e0, e0_prime, e_hat, lemma7_sides, verify_prop4
from qt_screening.algebra.monomials import HatMonomial
from qt_screening.algebra.rings import Bicharacter, d_eval, hat_pi_d, pi_tilde_monomial
from qt_screening.algebra.tpoly import TPoly
from qt_screening.display.render import render_monomial
from qt_screening.parsing import parse_monomial
from qt_screening.verify.suites.base import CheckContext, PropertyCheck, Suite, expect_equal
from qt_screening.verify.suites.kernel_suites import e0_from_hat

# (node, monomial) instances whose outcomes are kept as golden rows on A2
GOLDEN_CASES: Tuple[Tuple[int, str], ...] = (
    (1, "W[1,0]*W[2,0]"),
    (1, "W[1,0]^2"),
    (1, "W[1,0]*W[1,2]"),
    (2, "W[2,0]*W[1,1]"),
    (1, "W[1,0]*W[1,2]*V[1,1]"),
    (1, "W[1,0]*V[2,0]"),
)


def prop4_row(result: Prop4Result) -> Dict[str, Any]:
    """Golden-file row for one factorization outcome."""
    row: Dict[str, Any] = {
        "node": result.node,
        "monomial": render_monomial(result.monomial),
        "beta": result.beta,
        "matches": result.matches,
        "factors": result.factor_count,
    }
    if result.first_difference is not None:
        m, got, want = result.first_difference
        row["first_difference"] = {"monomial": render_monomial(m), "got": str(got), "want": str(want)}
    return row


# -- prop4 -------------------------------------------------------------------------------


def _w_power(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    i, k, power = s.node(), s.k(), s.rng.randint(1, 4)
    result = verify_prop4(ctx.cd, i, HatMonomial.ww(i, k, power))
    if not result.matches:
        return f"W[{i},{k}]^{power}: {result.message}"
    return expect_equal(f"beta for W[{i},{k}]^{power}", result.beta, 0)


def _random_dominant(ctx: CheckContext) -> Optional[str]:
    i = ctx.sampler.node()
    result = verify_prop4(ctx.cd, i, ctx.sampler.dominant_hat(i))
    ctx.record["row"] = prop4_row(result)
    return None


def _golden_cases(ctx: CheckContext) -> Optional[str]:
    if ctx.cd != load_cartan("A2"):
        ctx.skip("golden factorization cases are stated for A2")
    rows: List[Dict[str, Any]] = []
    for node, text in GOLDEN_CASES:
        rows.append(prop4_row(verify_prop4(ctx.cd, node, parse_monomial(text, Ring.HAT, ctx.cd))))
    ctx.record["rows"] = rows
    return None


PROP4 = Suite(
    "prop4",
    "Ordered star products against E_i(m)",
    (
        PropertyCheck("w-power", "Prop 4", _w_power, simply_laced=True),
        PropertyCheck("random-dominant", "Prop 4", _random_dominant, simply_laced=True),
        PropertyCheck("golden-cases", "Prop 4", _golden_cases, samples=1, simply_laced=True),
    ),
)

# -- lemma7 ------------------------------------------------------------------------------


def _star_power(ctx: CheckContext) -> Optional[str]:
    s = ctx.sampler
    i, k, power = s.node(), s.k(), s.rng.randint(0, 5)
    m = HatMonomial.ww(i, k)
    others = [j for j in ctx.cd.nodes if j != i]
    if others and s.rng.random() < 0.5:
        m = m * HatMonomial.ww(s.rng.choice(others), s.k(), s.rng.randint(1, 2))
    left, right = lemma7_sides(ctx.cd, i, m, k, power)
    return expect_equal(f"[{m}(1 + V[{i},{k + 1}])]^*{power}", left, right)


LEMMA7 = Suite(
    "lemma7",
    "Star powers of m(1 + V) expand with t-binomial coefficients",
    (PropertyCheck("star-power", "Lemma 7", _star_power, simply_laced=True),),
)

# -- lemma13 -----------------------------------------------------------------------------


def _prime_from_hat(ctx: CheckContext) -> Optional[str]:
    i = ctx.sampler.node()
    top = ctx.sampler.dominant_hat(i)
    nakajima = Bicharacter.nakajima()
    expected = hat_pi_d(ctx.cd, nakajima, e_hat(ctx.cd, i, top)).scale(
        TPoly.t_power(d_eval(ctx.cd, nakajima, top, top))
    )
    m = pi_tilde_monomial(ctx.cd, top)
    return expect_equal(f"E'_0,{i}({m})", e0_prime(ctx.cd, i, m), expected)


def _e0_consistent(ctx: CheckContext) -> Optional[str]:
    i = ctx.sampler.node()
    m = ctx.sampler.dominant_y(i)
    return expect_equal(f"E_0,{i}({m})", e0(ctx.cd, i, m), e0_from_hat(ctx, i, m))


LEMMA13 = Suite(
    "lemma13",
    "Primed generators are the nakajima images of the hat generators",
    (
        PropertyCheck("prime-from-hat", "Lemma 13", _prime_from_hat, simply_laced=True),
        PropertyCheck("e0-from-hat", "Lemma 13", _e0_consistent),
    ),
)


__all__ = ["GOLDEN_CASES", "LEMMA13", "LEMMA7", "PROP4", "prop4_row"]
