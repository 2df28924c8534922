"""Pydantic models for JSON encodings and run reports."""

from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field

from qt_screening.algebra.elements import Element, Ring, element_class
from qt_screening.algebra.kernels import Decomposition
from qt_screening.algebra.lattice import SpectralIndex
from qt_screening.algebra.monomials import HatMonomial, Monomial, YMonomial
from qt_screening.algebra.screening import ScreenerElement
from qt_screening.algebra.tpoly import TPoly

CoeffJSON = Union[int, Dict[str, int]]


class MonomialModel(BaseModel):
    """Exponents keyed by "i,k"; V/W for hat monomials, Y for Y-monomials"""
    V: Optional[Dict[str, int]] = None
    W: Optional[Dict[str, int]] = None
    Y: Optional[Dict[str, int]] = None


class TermModel(MonomialModel):
    """One element term"""
    coeff: CoeffJSON


class ScreenerTermModel(BaseModel):
    """One term c * m * S_{i,k}"""
    monomial: MonomialModel
    k: int
    coeff: CoeffJSON


class ScreenerModel(BaseModel):
    """Screener element with its node and ring"""
    node: int
    ring: str
    terms: List[ScreenerTermModel] = Field(default_factory=list)


class DominantTermModel(BaseModel):
    monomial: MonomialModel
    coeff: CoeffJSON


class DecompositionModel(BaseModel):
    """Dominant part and non-dominant remainder"""
    node: int
    flavor: str
    dominant: List[DominantTermModel] = Field(default_factory=list)
    remainder: List[TermModel] = Field(default_factory=list)


class KernelReport(BaseModel):
    """Kernel membership by decomposition, cross-checked by the screening normal form"""
    cartan: str
    flavor: str
    nodes: List[int]
    expression: str
    member: bool
    nf_member: bool
    agree: bool
    decompositions: List[DecompositionModel] = Field(default_factory=list)
    screen_nf: Dict[str, str] = Field(default_factory=dict)
    in_kt: Optional[bool] = None
    kt_witness: Optional[str] = None


class PropertyOutcome(BaseModel):
    """Pass/fail counts for one checked property"""
    name: str
    anchor: str
    cartans: List[str] = Field(default_factory=list)
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    window_skipped: int = 0


class Counterexample(BaseModel):
    """First failing instance of a suite"""
    check: str
    anchor: str
    cartan: str
    index: int
    detail: str


class SuiteReport(BaseModel):
    """Complete result of one verification suite"""
    suite: str
    config: Dict[str, Any]
    passed: int
    failed: int
    counterexample: Optional[Counterexample] = None
    properties: List[PropertyOutcome] = Field(default_factory=list)
    anchors: List[str] = Field(default_factory=list)
    extra: Dict[str, Any] = Field(default_factory=dict)

    @property
    def window_starved(self) -> List[str]:
        """Properties with no passing sample and at least one sample outside the window."""
        return [p.name for p in self.properties if p.passed == 0 and p.window_skipped > 0]


# -- encoders ----------------------------------------------------------------------------


def encode_tpoly(p: TPoly) -> Dict[str, int]:
    """{"exponent": coefficient} with string keys."""
    return {str(e): c for e, c in p.terms}


def decode_tpoly(data: Dict[str, int]) -> TPoly:
    return TPoly((int(e), c) for e, c in data.items())


def encode_coefficient(c: Union[int, TPoly]) -> CoeffJSON:
    return c if isinstance(c, int) else encode_tpoly(c)


def decode_coefficient(data: CoeffJSON, ring: Ring) -> Union[int, TPoly]:
    if ring is Ring.CLASSICAL:
        if not isinstance(data, int):
            raise ValueError("classical coefficients are plain integers")
        return data
    return TPoly.const(data) if isinstance(data, int) else decode_tpoly(data)


def _encode_exponents(pairs: Any) -> Dict[str, int]:
    return {f"{i},{k}": e for (i, k), e in pairs}


def _decode_exponents(data: Optional[Dict[str, int]]) -> Dict[SpectralIndex, int]:
    result: Dict[SpectralIndex, int] = {}
    for key, e in (data or {}).items():
        node, k = key.split(",")
        result[SpectralIndex(int(node), int(k))] = e
    return result


def encode_monomial(m: Monomial) -> MonomialModel:
    if isinstance(m, HatMonomial):
        return MonomialModel(V=_encode_exponents(m.v) or None, W=_encode_exponents(m.w) or None)
    return MonomialModel(Y=_encode_exponents(m.exponents) or None)


def decode_monomial(model: MonomialModel, ring: Ring) -> Monomial:
    if ring is Ring.HAT:
        if model.Y:
            raise ValueError("hat monomials carry V and W exponents only")
        return HatMonomial.from_mappings(_decode_exponents(model.V), _decode_exponents(model.W))
    if model.V or model.W:
        raise ValueError("Y-monomials carry Y exponents only")
    return YMonomial.from_mapping(_decode_exponents(model.Y))


def encode_element(x: Element[Any]) -> List[TermModel]:
    return [
        TermModel(**encode_monomial(m).model_dump(exclude_none=True), coeff=encode_coefficient(c))
        for m, c in x
    ]


def decode_element(terms: List[TermModel], ring: Union[Ring, str]) -> Element[Any]:
    ring = Ring(ring)
    cls = element_class(ring)
    return cls(  # type: ignore[no-any-return]
        (decode_monomial(t, ring), decode_coefficient(t.coeff, ring)) for t in terms
    )


def encode_screener(s: ScreenerElement) -> ScreenerModel:
    return ScreenerModel(
        node=s.node,
        ring=s.ring.value,
        terms=[
            ScreenerTermModel(monomial=encode_monomial(m), k=k, coeff=encode_coefficient(c))
            for (m, k), c in s
        ],
    )


def decode_screener(model: ScreenerModel) -> ScreenerElement:
    ring = Ring(model.ring)
    return ScreenerElement(
        model.node,
        ring,
        [
            ((decode_monomial(t.monomial, ring), t.k), decode_coefficient(t.coeff, ring))
            for t in model.terms
        ],
    )


def encode_decomposition(dec: Decomposition) -> DecompositionModel:
    return DecompositionModel(
        node=dec.node,
        flavor=dec.flavor.value,
        dominant=[
            DominantTermModel(monomial=encode_monomial(m), coeff=encode_coefficient(c))
            for m, c in dec.dominant_part.items()
        ],
        remainder=encode_element(dec.remainder) if dec.remainder is not None else [],
    )


def to_json(model: BaseModel) -> str:
    """Stable JSON text (no timestamps, unset optionals dropped)."""
    return model.model_dump_json(indent=2, exclude_none=True)


__all__ = [
    "Counterexample",
    "DecompositionModel",
    "DominantTermModel",
    "KernelReport",
    "MonomialModel",
    "PropertyOutcome",
    "ScreenerModel",
    "ScreenerTermModel",
    "SuiteReport",
    "TermModel",
    "decode_coefficient",
    "decode_element",
    "decode_monomial",
    "decode_screener",
    "decode_tpoly",
    "encode_coefficient",
    "encode_decomposition",
    "encode_element",
    "encode_monomial",
    "encode_screener",
    "encode_tpoly",
    "to_json",
]
