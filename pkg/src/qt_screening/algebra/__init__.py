"""Exact algebra: Cartan data, Laurent polynomials in t, the monomial rings and their operators."""

from qt_screening.algebra.cartan import (
    CartanData,
    a_inverse_monomial,
    a_monomial,
    load_cartan,
    named_cartan,
)
from qt_screening.algebra.elements import (
    ClassicalElement,
    Element,
    HatElement,
    Ring,
    YElement,
    element_class,
)
from qt_screening.algebra.kernels import (
    Decomposition,
    Flavor,
    Prop4Result,
    alpha,
    decompose,
    e0,
    e0_prime,
    e_classical,
    e_hat,
    in_kernel_module,
    in_kt,
    reconstruct,
    verify_prop4,
)
from qt_screening.algebra.lattice import SpectralIndex, Window
from qt_screening.algebra.monomials import HatMonomial, Monomial, YMonomial
from qt_screening.algebra.rings import (
    Bicharacter,
    OrderResult,
    Relation,
    bar_hat,
    bar_y,
    d_eval,
    hat_pi_d,
    order_le,
    pi_node,
    pi_t,
    pi_tilde_t,
    star_mul,
    u_of_hat,
    u_of_y,
    wt_i,
)
from qt_screening.algebra.screening import (
    QuotientKind,
    ScreenerElement,
    bar_screener,
    nf,
    project_screener,
    right_action,
    screen,
    screen_l,
    screener_equal,
)
from qt_screening.algebra.tpoly import TPoly, bar_t, divide_by_t_minus_1, gauss_binom, t_integer

__all__ = [
    "Bicharacter",
    "CartanData",
    "ClassicalElement",
    "Decomposition",
    "Element",
    "Flavor",
    "HatElement",
    "HatMonomial",
    "Monomial",
    "OrderResult",
    "Prop4Result",
    "QuotientKind",
    "Relation",
    "Ring",
    "ScreenerElement",
    "SpectralIndex",
    "TPoly",
    "Window",
    "YElement",
    "YMonomial",
    "a_inverse_monomial",
    "a_monomial",
    "alpha",
    "bar_hat",
    "bar_screener",
    "bar_t",
    "bar_y",
    "d_eval",
    "decompose",
    "divide_by_t_minus_1",
    "e0",
    "e0_prime",
    "e_classical",
    "e_hat",
    "element_class",
    "gauss_binom",
    "hat_pi_d",
    "in_kernel_module",
    "in_kt",
    "load_cartan",
    "named_cartan",
    "nf",
    "order_le",
    "pi_node",
    "pi_t",
    "pi_tilde_t",
    "project_screener",
    "reconstruct",
    "right_action",
    "screen",
    "screen_l",
    "screener_equal",
    "star_mul",
    "t_integer",
    "u_of_hat",
    "u_of_y",
    "verify_prop4",
    "wt_i",
]
