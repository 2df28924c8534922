"""Monomials of the rings built on the spectral lattice.

HatMonomial is a monomial in the commuting variables V_{i,a}, W_{i,a} (non-negative exponents);
YMonomial is a Laurent monomial in the Y_{i,a}.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Mapping, Tuple, Union

from qt_screening.algebra.lattice import SpectralIndex

Exponents = Tuple[Tuple[SpectralIndex, int], ...]
IndexLike = Union[SpectralIndex, Tuple[int, int]]


def canonical_exponents(mapping: Mapping[IndexLike, int]) -> Exponents:
    """Sorted exponent tuple without zero entries."""
    return tuple(
        sorted((SpectralIndex(*idx), int(e)) for idx, e in mapping.items() if e)
    )


def _merge(a: Exponents, b: Exponents, sign: int = 1) -> Dict[SpectralIndex, int]:
    acc: Dict[SpectralIndex, int] = dict(a)
    for idx, e in b:
        acc[idx] = acc.get(idx, 0) + sign * e
    return acc


@dataclass(frozen=True, order=True)
class YMonomial:
    """Laurent monomial prod Y_{i,a}^{u_{i,a}}."""

    exponents: Exponents = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[IndexLike, int]) -> "YMonomial":
        return cls(canonical_exponents(mapping))

    @classmethod
    def y(cls, node: int, k: int, power: int = 1) -> "YMonomial":
        return cls.from_mapping({SpectralIndex(node, k): power})

    @cached_property
    def _lookup(self) -> Dict[SpectralIndex, int]:
        return dict(self.exponents)

    def exponent(self, node: int, k: int) -> int:
        return self._lookup.get(SpectralIndex(node, k), 0)

    def as_dict(self) -> Dict[SpectralIndex, int]:
        return dict(self.exponents)

    def node_profile(self, node: int) -> Dict[int, int]:
        """k -> exponent on one node."""
        return {idx.k: e for idx, e in self.exponents if idx.node == node}

    def support(self) -> Tuple[SpectralIndex, ...]:
        return tuple(idx for idx, _ in self.exponents)

    def is_one(self) -> bool:
        return not self.exponents

    def inverse(self) -> "YMonomial":
        return YMonomial(tuple((idx, -e) for idx, e in self.exponents))

    def __mul__(self, other: "YMonomial") -> "YMonomial":
        if not isinstance(other, YMonomial):
            return NotImplemented
        return YMonomial.from_mapping(_merge(self.exponents, other.exponents))

    def __truediv__(self, other: "YMonomial") -> "YMonomial":
        if not isinstance(other, YMonomial):
            return NotImplemented
        return YMonomial.from_mapping(_merge(self.exponents, other.exponents, -1))

    def __pow__(self, power: int) -> "YMonomial":
        return YMonomial.from_mapping({idx: e * power for idx, e in self.exponents})


@dataclass(frozen=True, order=True)
class HatMonomial:
    """Monomial prod V_{i,a}^{v_{i,a}} W_{i,a}^{w_{i,a}} with non-negative exponents."""

    v: Exponents = ()
    w: Exponents = ()

    def __post_init__(self) -> None:
        for idx, e in self.v + self.w:
            if e < 0:
                raise ValueError(f"hat monomials have non-negative exponents, got {e} at {idx}")

    @classmethod
    def from_mappings(
        cls,
        v: Mapping[IndexLike, int] | None = None,
        w: Mapping[IndexLike, int] | None = None,
    ) -> "HatMonomial":
        return cls(canonical_exponents(v or {}), canonical_exponents(w or {}))

    @classmethod
    def vv(cls, node: int, k: int, power: int = 1) -> "HatMonomial":
        """V_{node,q^k}^power."""
        return cls.from_mappings(v={SpectralIndex(node, k): power})

    @classmethod
    def ww(cls, node: int, k: int, power: int = 1) -> "HatMonomial":
        """W_{node,q^k}^power."""
        return cls.from_mappings(w={SpectralIndex(node, k): power})

    @cached_property
    def _v_lookup(self) -> Dict[SpectralIndex, int]:
        return dict(self.v)

    @cached_property
    def _w_lookup(self) -> Dict[SpectralIndex, int]:
        return dict(self.w)

    def v_exponent(self, node: int, k: int) -> int:
        return self._v_lookup.get(SpectralIndex(node, k), 0)

    def w_exponent(self, node: int, k: int) -> int:
        return self._w_lookup.get(SpectralIndex(node, k), 0)

    def support(self) -> Tuple[SpectralIndex, ...]:
        return tuple(sorted({idx for idx, _ in self.v + self.w}))

    def is_one(self) -> bool:
        return not self.v and not self.w

    def strip_v(self, node: int, k: int) -> "HatMonomial":
        """Divide by one copy of V_{node,q^k}; the factor must be present."""
        idx = SpectralIndex(node, k)
        e = self._v_lookup.get(idx, 0)
        if e <= 0:
            raise ValueError(f"V[{node},{k}] does not divide this monomial")
        v = dict(self.v)
        v[idx] = e - 1
        return HatMonomial(canonical_exponents(v), self.w)

    def __mul__(self, other: "HatMonomial") -> "HatMonomial":
        if not isinstance(other, HatMonomial):
            return NotImplemented
        return HatMonomial(
            canonical_exponents(_merge(self.v, other.v)),
            canonical_exponents(_merge(self.w, other.w)),
        )

    def __pow__(self, power: int) -> "HatMonomial":
        if power < 0:
            raise ValueError("hat monomials cannot be inverted")
        return HatMonomial(
            tuple((idx, e * power) for idx, e in self.v) if power else (),
            tuple((idx, e * power) for idx, e in self.w) if power else (),
        )


Monomial = Union[HatMonomial, YMonomial]


__all__ = [
    "Exponents",
    "HatMonomial",
    "YMonomial",
    "Monomial",
    "canonical_exponents",
]
