"""Registry of verification suites."""

from typing import Dict, List

from qt_screening.verify.suites.algebra_suites import BICHARACTER, BINOM, LEIBNIZ
from qt_screening.verify.suites.base import (
    CheckContext,
    PropertyCheck,
    SampleSkipped,
    Suite,
)
from qt_screening.verify.suites.kernel_suites import (
    KERNEL_CLASSICAL,
    KERNEL_HAT,
    KERNEL_Y,
    ORDER,
)
from qt_screening.verify.suites.quotient_suites import DIAGRAMS, INVOLUTION, QUOTIENT
from qt_screening.verify.suites.star_suites import GOLDEN_CASES, LEMMA13, LEMMA7, PROP4, prop4_row

SUITES: Dict[str, Suite] = {
    suite.name: suite
    for suite in (
        LEIBNIZ,
        BICHARACTER,
        BINOM,
        KERNEL_HAT,
        KERNEL_Y,
        KERNEL_CLASSICAL,
        DIAGRAMS,
        QUOTIENT,
        INVOLUTION,
        ORDER,
        PROP4,
        LEMMA7,
        LEMMA13,
    )
}


def suite_names() -> List[str]:
    return list(SUITES)


def get_suite(name: str) -> Suite:
    """Look up a suite by name (raises KeyError listing the known names)."""
    try:
        return SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite '{name}' (known: {', '.join(SUITES)})") from None


__all__ = [
    "CheckContext",
    "GOLDEN_CASES",
    "PropertyCheck",
    "SUITES",
    "SampleSkipped",
    "Suite",
    "get_suite",
    "prop4_row",
    "suite_names",
]
