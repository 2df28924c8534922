"""Plain-text rendering of polynomials, monomials, elements and screener elements.

The output is accepted back by the expression grammar ("·" reads as "*").
"""

from typing import Any, List, Union

from qt_screening.algebra.monomials import HatMonomial, Monomial
from qt_screening.algebra.tpoly import TPoly

DOT = "·"


def _join_signed(parts: List[str]) -> str:
    text = " + ".join(parts)
    return text.replace("+ -", "- ")


def _t_term(exp: int, coeff: int) -> str:
    if exp == 0:
        return str(coeff)
    power = "t" if exp == 1 else f"t^{exp}"
    if coeff == 1:
        return power
    if coeff == -1:
        return f"-{power}"
    return f"{coeff}{power}"


def render_tpoly(p: TPoly) -> str:
    """Terms by descending degree, e.g. "t^2 + 1" or "-t^-2"."""
    if not p:
        return "0"
    return _join_signed([_t_term(e, c) for e, c in sorted(p.terms, reverse=True)])


def _factor(letter: str, node: int, k: int, e: int) -> str:
    return f"{letter}[{node},{k}]" if e == 1 else f"{letter}[{node},{k}]^{e}"


def render_monomial(m: Monomial) -> str:
    """W factors before V factors; "1" for the empty monomial."""
    if isinstance(m, HatMonomial):
        factors = [_factor("W", i, k, e) for (i, k), e in m.w]
        factors += [_factor("V", i, k, e) for (i, k), e in m.v]
    else:
        factors = [_factor("Y", i, k, e) for (i, k), e in m.exponents]
    return DOT.join(factors) if factors else "1"


def render_coefficient(c: Union[int, TPoly]) -> str:
    return str(c) if isinstance(c, int) else render_tpoly(c)


def _term(c: Union[int, TPoly], body: str) -> str:
    """c·body with unit coefficients dropped and sums parenthesized."""
    if isinstance(c, int):
        if c == 1:
            return body
        if c == -1:
            return f"-{body}"
        return f"{c}{DOT}{body}"
    if c == 1:
        return body
    if c == -1:
        return f"-{body}"
    coeff = render_tpoly(c)
    if len(c.terms) > 1:
        coeff = f"({coeff})"
    return f"{coeff}{DOT}{body}"


def render_element(x: Any) -> str:
    """Canonical text form of an element; "0" when empty."""
    parts = []
    for m, c in x:
        if m.is_one():
            text = render_coefficient(c)
            parts.append(f"({text})" if isinstance(c, TPoly) and len(c.terms) > 1 else text)
        else:
            parts.append(_term(c, render_monomial(m)))
    return _join_signed(parts) if parts else "0"


def render_screener(s: Any) -> str:
    """Terms c·m·S[i,k]; "0" when empty."""
    parts = []
    for (m, k), c in s:
        symbol = f"S[{s.node},{k}]"
        body = symbol if m.is_one() else f"{render_monomial(m)}{DOT}{symbol}"
        parts.append(_term(c, body))
    return _join_signed(parts) if parts else "0"


__all__ = [
    "render_coefficient",
    "render_element",
    "render_monomial",
    "render_screener",
    "render_tpoly",
]
