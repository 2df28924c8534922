"""Cartan data, named finite types and the elementary monomials A_{i,a}.

Named types follow the convention C_ij = (alpha_i, alpha_j) / r_i with r_i = (alpha_i, alpha_i) / 2
and short roots of length r = 1. This is the transpose of the Bourbaki matrix; for instance B2 is
[[2, -1], [-2, 2]] with r = (2, 1).
"""

import json
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from qt_screening.algebra.lattice import SpectralIndex, Window
from qt_screening.algebra.monomials import YMonomial
from qt_screening.errors import CartanError

logger = logging.getLogger(__name__)

# lattice offsets of the cross terms of A_{i,a}, keyed by the Cartan entry
CROSS_OFFSETS: Dict[int, Tuple[int, ...]] = {
    0: (),
    -1: (0,),
    -2: (-1, 1),
    -3: (-2, 0, 2),
}

CartanSpec = Union[str, Mapping[str, Any], "CartanData"]


@dataclass(frozen=True)
class CartanData:
    """Validated Cartan matrix with its symmetrizers.

    Nodes are numbered 1..n; q_i = q^{r_i}.

    Attributes:
        matrix: n x n integer Cartan matrix, row-major
        symmetrizers: positive integers r_i with r_i C_ij = r_j C_ji
        name: display name (not part of equality)
    """

    matrix: Tuple[Tuple[int, ...], ...]
    symmetrizers: Tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        """Check the Cartan axioms; raise CartanError if invalid."""
        n = len(self.matrix)
        if n == 0:
            raise CartanError("Cartan matrix must have at least one node")
        if any(len(row) != n for row in self.matrix):
            raise CartanError("Cartan matrix must be square")
        if len(self.symmetrizers) != n:
            raise CartanError(f"expected {n} symmetrizers, got {len(self.symmetrizers)}")
        if any(r <= 0 for r in self.symmetrizers):
            raise CartanError("symmetrizers must be positive")
        for i in range(n):
            if self.matrix[i][i] != 2:
                raise CartanError(f"diagonal entry C[{i + 1}][{i + 1}] must be 2")
            for j in range(n):
                if i == j:
                    continue
                cij, cji = self.matrix[i][j], self.matrix[j][i]
                if cij > 0:
                    raise CartanError(f"off-diagonal entry C[{i + 1}][{j + 1}] = {cij} is positive")
                if cij < -3:
                    raise CartanError(f"off-diagonal entry C[{i + 1}][{j + 1}] = {cij} is below -3")
                if (cij == 0) != (cji == 0):
                    raise CartanError(f"C[{i + 1}][{j + 1}] and C[{j + 1}][{i + 1}] must vanish together")
                if self.symmetrizers[i] * cij != self.symmetrizers[j] * cji:
                    raise CartanError(
                        f"matrix is not symmetrized by r: r_{i + 1} C[{i + 1}][{j + 1}] != "
                        f"r_{j + 1} C[{j + 1}][{i + 1}]"
                    )

    @property
    def n(self) -> int:
        return len(self.matrix)

    @property
    def nodes(self) -> range:
        return range(1, self.n + 1)

    def check_node(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise CartanError(f"node {i} is outside 1..{self.n}")

    def c(self, i: int, j: int) -> int:
        """Entry C_ij (1-based)."""
        return self.matrix[i - 1][j - 1]

    def r(self, i: int) -> int:
        """Symmetrizer r_i (1-based)."""
        return self.symmetrizers[i - 1]

    @property
    def max_r(self) -> int:
        return max(self.symmetrizers)

    @property
    def is_simply_laced(self) -> bool:
        """True for ADE data (all r_i = 1)."""
        return all(r == 1 for r in self.symmetrizers)

    def neighbours(self, i: int) -> List[int]:
        """Nodes j != i with C_ji != 0."""
        return [j for j in self.nodes if j != i and self.c(j, i) != 0]

    def as_dict(self) -> Dict[str, Any]:
        return {"C": [list(row) for row in self.matrix], "r": list(self.symmetrizers)}

    def __str__(self) -> str:
        return self.name or json.dumps(self.as_dict(), separators=(",", ":"))


def _from_bilinear(name: str, lengths: Sequence[int], edges: Mapping[Tuple[int, int], int]) -> CartanData:
    """Build C_ij = B_ij / r_i from the symmetric form B (edges given 0-based, B_ii = 2 r_i)."""
    n = len(lengths)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(2)
                continue
            b = edges.get((i, j), edges.get((j, i), 0))
            if b % lengths[i]:
                raise CartanError(f"inconsistent bilinear form for {name}")
            row.append(b // lengths[i])
        rows.append(tuple(row))
    return CartanData(tuple(rows), tuple(lengths), name=name)


def _chain(n: int, weight: int = -1) -> Dict[Tuple[int, int], int]:
    return {(i, i + 1): weight for i in range(n - 1)}


def named_cartan(type_letter: str, rank: int) -> CartanData:
    """Standard finite-type Cartan datum, e.g. named_cartan("B", 2)."""
    letter = type_letter.upper()
    name = f"{letter}{rank}"
    if letter == "A" and rank >= 1:
        return _from_bilinear(name, [1] * rank, _chain(rank))
    if letter == "B" and rank >= 2:
        lengths = [2] * (rank - 1) + [1]
        return _from_bilinear(name, lengths, _chain(rank, -2))
    if letter == "C" and rank >= 2:
        lengths = [1] * (rank - 1) + [2]
        edges = _chain(rank - 1)
        edges[(rank - 2, rank - 1)] = -2
        return _from_bilinear(name, lengths, edges)
    if letter == "D" and rank >= 4:
        edges = _chain(rank - 1)
        edges[(rank - 3, rank - 1)] = -1
        return _from_bilinear(name, [1] * rank, edges)
    if letter == "E" and rank in (6, 7, 8):
        # Bourbaki numbering: 1-3-4-5-6(-7-8) with 2 attached to 4
        edges = {(0, 2): -1, (2, 3): -1, (1, 3): -1}
        edges.update({(k, k + 1): -1 for k in range(3, rank - 1)})
        return _from_bilinear(name, [1] * rank, edges)
    if letter == "F" and rank == 4:
        return _from_bilinear(name, [2, 2, 1, 1], {(0, 1): -2, (1, 2): -2, (2, 3): -1})
    if letter == "G" and rank == 2:
        return _from_bilinear(name, [1, 3], {(0, 1): -3})
    raise CartanError(f"unknown Cartan type '{name}'")


def minimal_symmetrizers(matrix: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Smallest positive integers r with r_i C_ij = r_j C_ji, per connected component."""
    n = len(matrix)
    ratios: List[Optional[Fraction]] = [None] * n
    for start in range(n):
        if ratios[start] is not None:
            continue
        ratios[start] = Fraction(1)
        component = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or matrix[i][j] == 0:
                    continue
                if matrix[j][i] == 0:
                    raise CartanError("C_ij and C_ji must vanish together")
                value = ratios[i] * Fraction(matrix[i][j], matrix[j][i])  # type: ignore[operator]
                if ratios[j] is None:
                    ratios[j] = value
                    component.append(j)
                    stack.append(j)
                elif ratios[j] != value:
                    raise CartanError("matrix is not symmetrizable")
        denominators = lcm(*(ratios[k].denominator for k in component))  # type: ignore[union-attr]
        scaled = [ratios[k] * denominators for k in component]  # type: ignore[operator]
        common = 0
        for value in scaled:
            common = gcd(common, value.numerator)
        for k, value in zip(component, scaled):
            ratios[k] = Fraction(value.numerator // common)
    return tuple(int(r) for r in ratios)  # type: ignore[arg-type]


def _block_sum(parts: Sequence[CartanData]) -> CartanData:
    n = sum(p.n for p in parts)
    rows = [[0] * n for _ in range(n)]
    lengths: List[int] = []
    offset = 0
    for part in parts:
        for i in range(part.n):
            for j in range(part.n):
                rows[offset + i][offset + j] = part.matrix[i][j]
        lengths.extend(part.symmetrizers)
        offset += part.n
    name = "x".join(p.name for p in parts)
    return CartanData(tuple(tuple(r) for r in rows), tuple(lengths), name=name)


_NAME = re.compile(r"^\s*([A-Ga-g])_?(\d+)\s*$")


def load_cartan(spec: CartanSpec) -> CartanData:
    """Resolve a Cartan spec into validated CartanData.

    Args:
        spec: a type name ("A2", "B2", "sl2", "A1xA1"), a JSON object string or mapping
            {"C": [[...]], "r": [...]} (r optional), or CartanData itself

    Returns:
        Validated CartanData

    Raises:
        CartanError: if the spec is unknown or the matrix violates the Cartan axioms
    """
    if isinstance(spec, CartanData):
        return spec
    if isinstance(spec, str):
        text = spec.strip()
        if text.startswith("{"):
            try:
                return load_cartan(json.loads(text))
            except json.JSONDecodeError as exc:
                raise CartanError(f"invalid Cartan JSON: {exc}") from exc
        parts = [p for p in re.split(r"[x×+]", text) if p.strip()]
        if len(parts) > 1:
            return _block_sum([load_cartan(p) for p in parts])
        if text.lower().startswith("sl") and text[2:].isdigit():
            return named_cartan("A", int(text[2:]) - 1)
        match = _NAME.match(text)
        if not match:
            raise CartanError(f"unknown Cartan type '{spec}'")
        return named_cartan(match.group(1), int(match.group(2)))
    if isinstance(spec, Mapping):
        if "C" not in spec:
            raise CartanError("explicit Cartan spec needs a 'C' matrix")
        try:
            matrix = tuple(tuple(int(x) for x in row) for row in spec["C"])
        except (TypeError, ValueError) as exc:
            raise CartanError(f"Cartan matrix must contain integers: {exc}") from exc
        if "r" in spec and spec["r"] is not None:
            lengths = tuple(int(x) for x in spec["r"])
        else:
            if any(len(row) != len(matrix) for row in matrix):
                raise CartanError("Cartan matrix must be square")
            for i, row in enumerate(matrix):
                if row[i] != 2:
                    raise CartanError(f"diagonal entry C[{i + 1}][{i + 1}] must be 2")
                if any(x > 0 for j, x in enumerate(row) if j != i):
                    raise CartanError(f"row {i + 1} has a positive off-diagonal entry")
            lengths = minimal_symmetrizers(matrix)
        return CartanData(matrix, lengths, name=str(spec.get("name", "")))
    raise CartanError(f"unsupported Cartan spec of type {type(spec).__name__}")


@lru_cache(maxsize=None)
def a_inverse_monomial(cd: CartanData, i: int, k: int) -> YMonomial:
    """Exponent function of A_{i,q^k}^{-1}.

    -1 at (i, k - r_i) and (i, k + r_i); for j with C_ji = -1, -2, -3 the exponent +1 at
    (j, k), (j, k +- 1), or (j, k - 2), (j, k), (j, k + 2) respectively.
    """
    cd.check_node(i)
    r = cd.r(i)
    exps: Dict[SpectralIndex, int] = {
        SpectralIndex(i, k - r): -1,
        SpectralIndex(i, k + r): -1,
    }
    for j in cd.nodes:
        if j == i:
            continue
        for offset in CROSS_OFFSETS[cd.c(j, i)]:
            idx = SpectralIndex(j, k + offset)
            exps[idx] = exps.get(idx, 0) + 1
    return YMonomial.from_mapping(exps)


def a_monomial(cd: CartanData, i: int, k: int) -> YMonomial:
    """A_{i,q^k} itself."""
    return a_inverse_monomial(cd, i, k).inverse()


def a_support_window(cd: CartanData, i: int, k: int) -> Window:
    """Lattice range touched by A_{i,q^k}."""
    return Window.enclosing(idx.k for idx, _ in a_inverse_monomial(cd, i, k).exponents)


__all__ = [
    "CROSS_OFFSETS",
    "CartanData",
    "CartanSpec",
    "SpectralIndex",
    "Window",
    "load_cartan",
    "named_cartan",
    "minimal_symmetrizers",
    "a_inverse_monomial",
    "a_monomial",
    "a_support_window",
]
