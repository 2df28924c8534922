"""Spectral lattice points and windows.

A spectral parameter a = q^k is stored as the integer k; only exponent arithmetic is performed.
"""

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class SpectralIndex(NamedTuple):
    """A (node, k) pair standing for the variable indexed by node and a = q^k."""

    node: int
    k: int

    def shifted(self, offset: int) -> "SpectralIndex":
        """Return the same node at k + offset."""
        return SpectralIndex(self.node, self.k + offset)


@dataclass(frozen=True)
class Window:
    """Closed range of lattice points [kmin, kmax]."""

    kmin: int
    kmax: int

    def __post_init__(self) -> None:
        if self.kmin > self.kmax:
            raise ValueError(f"window kmin ({self.kmin}) must not exceed kmax ({self.kmax})")

    @classmethod
    def parse(cls, text: str) -> "Window":
        """Parse a 'kmin:kmax' string such as '-6:6'."""
        parts = text.strip().split(":")
        if len(parts) != 2:
            raise ValueError(f"window must look like 'kmin:kmax', got '{text}'")
        try:
            return cls(int(parts[0]), int(parts[1]))
        except ValueError as exc:
            raise ValueError(f"window bounds must be integers, got '{text}'") from exc

    @classmethod
    def enclosing(cls, points: Iterable[int], pad: int = 0) -> "Window":
        """Smallest window containing every k in points, widened by pad on both sides."""
        ks = list(points)
        if not ks:
            return cls(-pad, pad)
        return cls(min(ks) - pad, max(ks) + pad)

    def contains(self, k: int) -> bool:
        return self.kmin <= k <= self.kmax

    def union(self, other: "Window") -> "Window":
        return Window(min(self.kmin, other.kmin), max(self.kmax, other.kmax))

    @property
    def points(self) -> range:
        return range(self.kmin, self.kmax + 1)

    def __str__(self) -> str:
        return f"{self.kmin}:{self.kmax}"


__all__ = ["SpectralIndex", "Window"]
