"""qt-screening: t-analogues of screening operators on q,t-characters.

Exact Laurent-polynomial algebra over the hat, Y and classical monomial rings, the screening
operators and their quotient normal forms, kernel generators, and randomized verification
suites for the identities relating them.
"""

__version__ = "0.1.0"

from qt_screening.algebra import (  # noqa: E402
    Bicharacter,
    CartanData,
    ClassicalElement,
    Flavor,
    HatElement,
    HatMonomial,
    QuotientKind,
    Ring,
    ScreenerElement,
    TPoly,
    Window,
    YElement,
    YMonomial,
    decompose,
    e0,
    e0_prime,
    e_hat,
    in_kernel_module,
    in_kt,
    load_cartan,
    nf,
    screen,
    screen_l,
)
from qt_screening.config import OutputSettings, RunConfig  # noqa: E402
from qt_screening.errors import QtScreeningError  # noqa: E402
from qt_screening.parsing import parse_element, parse_monomial  # noqa: E402

__all__ = [
    "Bicharacter",
    "CartanData",
    "ClassicalElement",
    "Flavor",
    "HatElement",
    "HatMonomial",
    "OutputSettings",
    "QtScreeningError",
    "QuotientKind",
    "Ring",
    "RunConfig",
    "ScreenerElement",
    "TPoly",
    "Window",
    "YElement",
    "YMonomial",
    "__version__",
    "decompose",
    "e0",
    "e0_prime",
    "e_hat",
    "in_kernel_module",
    "in_kt",
    "load_cartan",
    "nf",
    "screen",
    "screen_l",
    "parse_element",
    "parse_monomial",
]
