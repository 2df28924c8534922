"""Elements: finitely supported linear combinations of monomials.

One class per ring. HatElement and YElement carry Laurent polynomial coefficients; ClassicalElement
is the t = 1 ring with plain integer coefficients. Elements are immutable and canonical (sorted,
no zero coefficients), so equality is structural.
"""

from enum import Enum
from typing import (
    Any,
    ClassVar,
    Dict,
    Generic,
    Iterable,
    Iterator,
    List,
    Mapping,
    Tuple,
    TypeVar,
    Union,
)

from qt_screening.algebra.monomials import HatMonomial, YMonomial
from qt_screening.algebra.tpoly import TPoly

MonomialT = TypeVar("MonomialT", HatMonomial, YMonomial)
Coefficient = Union[int, TPoly]
E = TypeVar("E", bound="Element[Any]")


class Ring(str, Enum):
    """Ring tags: the deformed hat ring, the Laurent Y ring, and its t = 1 specialization."""

    HAT = "hat"
    Y = "y"
    CLASSICAL = "classical"


class Element(Generic[MonomialT]):
    """Canonical linear combination sum c_m m."""

    ring: ClassVar[Ring]
    monomial_type: ClassVar[type]

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Union[Mapping[MonomialT, Coefficient], Iterable[Tuple[MonomialT, Coefficient]], None] = None,
    ):
        acc: Dict[MonomialT, Coefficient] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for m, c in items:
                if not isinstance(m, self.monomial_type):
                    raise TypeError(
                        f"{type(self).__name__} expects {self.monomial_type.__name__}, "
                        f"got {type(m).__name__}"
                    )
                coeff = self.coerce(c)
                acc[m] = acc[m] + coeff if m in acc else coeff
        self._terms: Dict[MonomialT, Coefficient] = {m: acc[m] for m in sorted(acc) if acc[m]}

    @classmethod
    def coerce(cls, c: Any) -> Coefficient:
        return TPoly.coerce(c)

    @classmethod
    def one_monomial(cls) -> MonomialT:
        return cls.monomial_type()  # type: ignore[no-any-return]

    @classmethod
    def zero(cls: type[E]) -> E:
        return cls()

    @classmethod
    def scalar(cls: type[E], c: Coefficient) -> E:
        return cls({cls.one_monomial(): c})

    def terms(self) -> List[Tuple[MonomialT, Coefficient]]:
        """(monomial, coefficient) pairs in canonical order."""
        return list(self._terms.items())

    def monomials(self) -> List[MonomialT]:
        return list(self._terms)

    def coefficient(self, m: MonomialT) -> Coefficient:
        return self._terms.get(m, self.coerce(0))

    def is_scalar(self) -> bool:
        """True if only the constant monomial occurs (zero included)."""
        return all(m == self.one_monomial() for m in self._terms)

    def __iter__(self) -> Iterator[Tuple[MonomialT, Coefficient]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, m: object) -> bool:
        return m in self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            return self == type(self).scalar(other)
        if not isinstance(other, Element) or type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash((type(self).__name__, tuple(self._terms.items())))

    def _same(self: E, other: Any) -> E:
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, TPoly)) and not isinstance(other, bool):
            return type(self).scalar(other)
        raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self: E, other: Any) -> E:
        try:
            rhs = self._same(other)
        except TypeError:
            return NotImplemented
        return type(self)(list(self._terms.items()) + list(rhs._terms.items()))

    __radd__ = __add__

    def __neg__(self: E) -> E:
        return type(self)((m, -c) for m, c in self._terms.items())

    def __sub__(self: E, other: Any) -> E:
        try:
            rhs = self._same(other)
        except TypeError:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self: E, other: Any) -> E:
        return (-self) + other

    def scale(self: E, c: Coefficient) -> E:
        coeff = self.coerce(c)
        return type(self)((m, coeff * v) for m, v in self._terms.items())

    def __mul__(self: E, other: Any) -> E:
        """Commutative product of the underlying ring, or scalar multiplication."""
        if isinstance(other, (int, TPoly)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        acc: Dict[Any, Coefficient] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                c = c1 * c2
                acc[m] = acc[m] + c if m in acc else c
        return type(self)(acc)

    def __rmul__(self: E, other: Any) -> E:
        if isinstance(other, (int, TPoly)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._terms!r})"

    def __str__(self) -> str:
        from qt_screening.display.render import render_element

        return render_element(self)


class HatElement(Element[HatMonomial]):
    """Element of the hat ring Z[t, t^-1][V_{i,a}, W_{i,a}]."""

    ring = Ring.HAT
    monomial_type = HatMonomial
    __slots__ = ()


class YElement(Element[YMonomial]):
    """Element of the Laurent ring Z[t, t^-1][Y_{i,a}^{+-1}]."""

    ring = Ring.Y
    monomial_type = YMonomial
    __slots__ = ()


class ClassicalElement(Element[YMonomial]):
    """Element of Z[Y_{i,a}^{+-1}] (t = 1) with integer coefficients."""

    ring = Ring.CLASSICAL
    monomial_type = YMonomial
    __slots__ = ()

    @classmethod
    def coerce(cls, c: Any) -> Coefficient:
        if isinstance(c, TPoly):
            raise TypeError("classical coefficients are integers; evaluate at t = 1 first")
        if isinstance(c, bool) or not isinstance(c, int):
            raise TypeError(f"cannot use {type(c).__name__} as an integer coefficient")
        return c


ELEMENT_TYPES: Dict[Ring, type] = {
    Ring.HAT: HatElement,
    Ring.Y: YElement,
    Ring.CLASSICAL: ClassicalElement,
}

AnyElement = Union[HatElement, YElement, ClassicalElement]


def element_class(ring: Union[Ring, str]) -> type:
    return ELEMENT_TYPES[Ring(ring)]


__all__ = [
    "Ring",
    "Element",
    "HatElement",
    "YElement",
    "ClassicalElement",
    "AnyElement",
    "Coefficient",
    "ELEMENT_TYPES",
    "element_class",
]
