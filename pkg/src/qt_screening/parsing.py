"""Text grammar for elements, read through sympy.

Tokens W[i,k], V[i,k], Y[i,k], A[i,k] with optional ^n, products by juxtaposition, "*" or "·",
sums with + and -, coefficients as Laurent polynomials in t:

    W[1,0]*(1+V[1,1])        (t^2+1) Y[1,0]^-1        Y[1,0] A[1,1]^-2
"""

import logging
import re
from tokenize import TokenError
from typing import Any, Dict, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)

from qt_screening.algebra.cartan import CartanData, a_monomial
from qt_screening.algebra.elements import Element, Ring, element_class
from qt_screening.algebra.lattice import SpectralIndex
from qt_screening.algebra.monomials import HatMonomial, Monomial, YMonomial
from qt_screening.algebra.tpoly import TPoly
from qt_screening.errors import ExpressionParseError

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"([VWYA])\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")
_TRANSFORMATIONS = standard_transformations + (implicit_multiplication, convert_xor)
_LETTERS: Dict[Ring, Tuple[str, ...]] = {
    Ring.HAT: ("V", "W"),
    Ring.Y: ("Y", "A"),
    Ring.CLASSICAL: ("Y", "A"),
}

T_SYMBOL = sympy.Symbol("t")


def _symbol_name(letter: str, node: int, k: int) -> str:
    return f"{letter}_{node}_{k}" if k >= 0 else f"{letter}_{node}_m{-k}"


def _tokenize(text: str) -> Tuple[str, Dict[str, sympy.Symbol], Dict[str, Tuple[str, int, int]]]:
    symbols: Dict[str, sympy.Symbol] = {"t": T_SYMBOL}
    variables: Dict[str, Tuple[str, int, int]] = {}

    def replace(match: "re.Match[str]") -> str:
        letter, node, k = match.group(1), int(match.group(2)), int(match.group(3))
        name = _symbol_name(letter, node, k)
        symbols[name] = sympy.Symbol(name)
        variables[name] = (letter, node, k)
        return f" {name} "

    rewritten = _TOKEN.sub(replace, text.replace("·", "*"))
    if "[" in rewritten or "]" in rewritten:
        raise ExpressionParseError(f"malformed variable in '{text}'")
    return rewritten, symbols, variables


def parse_sympy(text: str) -> Tuple[sympy.Expr, Dict[str, Tuple[str, int, int]]]:
    """Parse text into an expanded sympy expression plus its variable table."""
    if not text or not text.strip():
        raise ExpressionParseError("empty expression")
    rewritten, symbols, variables = _tokenize(text)
    try:
        expr = parse_expr(
            rewritten,
            local_dict=symbols,
            transformations=_TRANSFORMATIONS,
            evaluate=True,
        )
    except (SyntaxError, TokenError, TypeError, ValueError, AttributeError) as exc:
        raise ExpressionParseError(f"cannot parse '{text}': {exc}") from exc
    if not isinstance(expr, sympy.Expr):
        raise ExpressionParseError(f"'{text}' is not an algebraic expression")
    unknown = {s.name for s in expr.free_symbols} - set(symbols)
    if unknown:
        raise ExpressionParseError(f"unknown symbols {sorted(unknown)} in '{text}'")
    return sympy.expand(expr), variables


def _integer(value: Any, what: str) -> int:
    if not (isinstance(value, sympy.Integer) or getattr(value, "is_Integer", False)):
        raise ExpressionParseError(f"{what} must be an integer, got {value}")
    return int(value)


def parse_element(text: str, ring: Union[Ring, str], cd: CartanData) -> Element[Any]:
    """Parse text into an element of the given ring.

    Raises:
        ExpressionParseError: on syntax errors, foreign variables, non-integer coefficients,
            negative V/W exponents, or t in the classical ring
    """
    ring = Ring(ring)
    expr, variables = parse_sympy(text)
    allowed = _LETTERS[ring]
    for letter, node, _ in variables.values():
        if letter not in allowed:
            raise ExpressionParseError(f"{letter}[...] is not a variable of the {ring.value} ring")
        cd.check_node(node)

    acc: Dict[Monomial, Any] = {}
    for term in sympy.Add.make_args(expr):
        if term == 0:
            continue
        coeff, factors = term.as_coeff_mul()
        scalar = _integer(coeff, "coefficient")
        t_exp = 0
        hat_v: Dict[SpectralIndex, int] = {}
        hat_w: Dict[SpectralIndex, int] = {}
        y_mono = YMonomial()
        for factor in factors:
            base, exp = factor.as_base_exp()
            e = _integer(exp, f"exponent of {base}")
            if base == T_SYMBOL:
                if ring is Ring.CLASSICAL:
                    raise ExpressionParseError("the classical ring has no t")
                t_exp += e
                continue
            if not isinstance(base, sympy.Symbol) or base.name not in variables:
                raise ExpressionParseError(f"unexpected factor {factor} in '{text}'")
            letter, node, k = variables[base.name]
            idx = SpectralIndex(node, k)
            if letter in ("V", "W"):
                if e < 0:
                    raise ExpressionParseError(f"{letter}[{node},{k}] cannot have a negative exponent")
                target = hat_v if letter == "V" else hat_w
                target[idx] = target.get(idx, 0) + e
            elif letter == "Y":
                y_mono = y_mono * YMonomial.y(node, k, e)
            else:
                y_mono = y_mono * a_monomial(cd, node, k) ** e
        mono: Monomial = HatMonomial.from_mappings(hat_v, hat_w) if ring is Ring.HAT else y_mono
        value: Any = scalar if ring is Ring.CLASSICAL else TPoly.t_power(t_exp, scalar)
        acc[mono] = acc[mono] + value if mono in acc else value
    element = element_class(ring)(acc)
    logger.debug(f"parsed '{text}' into {len(element)} terms")
    return element  # type: ignore[no-any-return]


def parse_monomial(text: str, ring: Union[Ring, str], cd: CartanData) -> Monomial:
    """Parse a single monomial with coefficient 1."""
    element = parse_element(text, ring, cd)
    terms = element.terms()
    if len(terms) != 1 or terms[0][1] != 1:
        raise ExpressionParseError(f"'{text}' is not a single monomial")
    return terms[0][0]


__all__ = ["parse_element", "parse_monomial", "parse_sympy"]
