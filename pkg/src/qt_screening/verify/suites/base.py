"""Property checks and the context they run in."""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from qt_screening.algebra.cartan import CartanData
from qt_screening.algebra.lattice import Window
from qt_screening.display.tables import summarize
from qt_screening.verify.sampling import Sampler


class SampleSkipped(Exception):
    """The sampled instance does not meet the property's hypotheses."""


@dataclass
class CheckContext:
    """Everything a check needs for one sample.

    Attributes:
        cd: Cartan datum under test
        window: Sampling window
        sampler: Seeded sampler for this (property, cartan, index)
        index: Sample index
        record: Values a check wants kept in the report (golden rows, beta values)
    """

    cd: CartanData
    window: Window
    sampler: Sampler
    index: int
    record: Dict[str, Any] = field(default_factory=dict)

    def skip(self, reason: str) -> None:
        raise SampleSkipped(reason)


CheckFn = Callable[[CheckContext], Optional[str]]


@dataclass(frozen=True)
class PropertyCheck:
    """One named property; check returns None on success or a failure description.

    Attributes:
        name: Short property name shown in reports
        anchor: Source statement the property restates ("Prop 1", "Lemma 5", ...)
        check: The check function
        samples: Fixed sample count for exhaustive grid checks (None uses the run's count)
        simply_laced: Skip on non simply-laced data
    """

    name: str
    anchor: str
    check: CheckFn
    samples: Optional[int] = None
    simply_laced: bool = False

    def sample_count(self, requested: int) -> int:
        return self.samples if self.samples is not None else requested


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    checks: Tuple[PropertyCheck, ...]

    def check(self, name: str) -> PropertyCheck:
        for prop in self.checks:
            if prop.name == name:
                return prop
        raise KeyError(f"suite {self.name} has no property '{name}'")

    @property
    def anchors(self) -> List[str]:
        return sorted({prop.anchor for prop in self.checks})


def mismatch(what: str, got: Any, expected: Any) -> str:
    """Failure text for an equality that did not hold."""
    return f"{what}: got {summarize(got)}, expected {summarize(expected)}"


def expect_equal(what: str, got: Any, expected: Any) -> Optional[str]:
    return None if got == expected else mismatch(what, got, expected)


def first_failure(*results: Optional[str]) -> Optional[str]:
    for result in results:
        if result is not None:
            return result
    return None


__all__ = [
    "CheckContext",
    "CheckFn",
    "PropertyCheck",
    "SampleSkipped",
    "Suite",
    "expect_equal",
    "first_failure",
    "mismatch",
]
