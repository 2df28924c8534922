"""Reproducible random instances.

Each sample gets its own random.Random seeded from (seed, suite, property, cartan, index), so
results do not depend on the worker count or on evaluation order.

Distributions: hat exponents in [1, 3], Y exponents in [-3, 3] without 0, support size at most
6, coefficients with at most 3 terms, t-exponents in [-2, 2] and integer coefficients in
[-3, 3] without 0. Sampled dominant monomials have i-weight at most 6, and hat elements drawn
for decomposition keep the positive weight at every node at most 6; both redraw up to 50 times
before falling back to a single W or Y variable.
"""

import random
from typing import Callable, Dict, List, TypeVar, Union

from qt_screening.algebra.cartan import CartanData
from qt_screening.algebra.elements import ClassicalElement, HatElement, YElement
from qt_screening.algebra.lattice import SpectralIndex, Window
from qt_screening.algebra.monomials import HatMonomial, YMonomial
from qt_screening.algebra.rings import Bicharacter, u_profile, wt_i
from qt_screening.algebra.tpoly import TPoly

MAX_SUPPORT = 6
MAX_WEIGHT = 6
MAX_DRAWS = 50

M = TypeVar("M", HatMonomial, YMonomial)


def sample_seed(seed: int, suite: str, prop: str, cartan: str, index: int) -> str:
    return f"{seed}:{suite}:{prop}:{cartan}:{index}"


class Sampler:
    """Random monomials, elements and parameters over a fixed Cartan datum and window."""

    def __init__(self, rng: random.Random, cd: CartanData, window: Window):
        self.rng = rng
        self.cd = cd
        self.window = window

    @classmethod
    def seeded(cls, key: str, cd: CartanData, window: Window) -> "Sampler":
        return cls(random.Random(key), cd, window)

    # -- scalars ---------------------------------------------------------------------

    def node(self) -> int:
        return self.rng.choice(list(self.cd.nodes))

    def k(self) -> int:
        return self.rng.randint(self.window.kmin, self.window.kmax)

    def nonzero(self, bound: int = 3) -> int:
        value = self.rng.randint(1, bound)
        return value if self.rng.random() < 0.5 else -value

    def tpoly(self) -> TPoly:
        return TPoly((self.rng.randint(-2, 2), self.nonzero()) for _ in range(self.rng.randint(1, 3)))

    def nonzero_tpoly(self) -> TPoly:
        while True:
            p = self.tpoly()
            if p:
                return p

    def bicharacter(self, allow_zero: bool = True) -> Bicharacter:
        choices = [Bicharacter.at_node(self.node())]
        if allow_zero:
            choices.append(Bicharacter.zero())
        if self.cd.is_simply_laced:
            choices.append(Bicharacter.nakajima())
        return self.rng.choice(choices)

    # -- monomials -------------------------------------------------------------------

    def _points(self, max_support: int) -> List[SpectralIndex]:
        size = self.rng.randint(1, max_support)
        return [SpectralIndex(self.node(), self.k()) for _ in range(size)]

    def hat_monomial(self, max_support: int = MAX_SUPPORT) -> HatMonomial:
        v: Dict[SpectralIndex, int] = {}
        w: Dict[SpectralIndex, int] = {}
        for idx in self._points(max_support):
            target = v if self.rng.random() < 0.5 else w
            target[idx] = target.get(idx, 0) + self.rng.randint(1, 3)
        return HatMonomial.from_mappings(v, w)

    def y_monomial(self, max_support: int = MAX_SUPPORT) -> YMonomial:
        exps: Dict[SpectralIndex, int] = {}
        for idx in self._points(max_support):
            exps[idx] = exps.get(idx, 0) + self.nonzero()
        return YMonomial.from_mapping(exps)

    def positive_weight(self, m: Union[HatMonomial, YMonomial]) -> int:
        """Largest sum of the positive u_{j,a}(m) over the nodes j."""
        return max(
            (sum(u for u in u_profile(self.cd, m, j).values() if u > 0) for j in self.cd.nodes),
            default=0,
        )

    def _redraw(self, draw: Callable[[], M], weight: Callable[[M], int], fallback: Callable[[], M]) -> M:
        for _ in range(MAX_DRAWS):
            m = draw()
            if weight(m) <= MAX_WEIGHT:
                return m
        return fallback()

    def dominant_hat(self, i: int, max_support: int = 3) -> HatMonomial:
        """Random hat monomial made i-dominant by adding W_{i,k} factors, i-weight at most MAX_WEIGHT."""

        def draw() -> HatMonomial:
            m = self.hat_monomial(max_support)
            fix = {SpectralIndex(i, k): -u for k, u in u_profile(self.cd, m, i).items() if u < 0}
            return m * HatMonomial.from_mappings(w=fix)

        return self._redraw(draw, lambda m: wt_i(self.cd, m, i), lambda: HatMonomial.ww(i, self.k()))

    def dominant_y(self, i: int, max_support: int = 3) -> YMonomial:
        """Random Y-monomial made i-dominant by raising negative node-i exponents to 0..1."""

        def draw() -> YMonomial:
            m = self.y_monomial(max_support)
            fix = {
                SpectralIndex(i, k): -u + self.rng.randint(0, 1)
                for k, u in m.node_profile(i).items()
                if u < 0
            }
            return m * YMonomial.from_mapping(fix)

        return self._redraw(draw, lambda m: wt_i(self.cd, m, i), lambda: YMonomial.y(i, self.k()))

    # -- elements --------------------------------------------------------------------

    def hat_element(
        self, max_terms: int = 3, max_support: int = MAX_SUPPORT, bounded: bool = False
    ) -> HatElement:
        """Random hat element; with bounded, every monomial keeps positive_weight <= MAX_WEIGHT."""

        def draw() -> HatMonomial:
            if not bounded:
                return self.hat_monomial(max_support)
            return self._redraw(
                lambda: self.hat_monomial(max_support),
                self.positive_weight,
                lambda: HatMonomial.ww(self.node(), self.k()),
            )

        return HatElement((draw(), self.tpoly()) for _ in range(self.rng.randint(1, max_terms)))

    def y_element(self, max_terms: int = 3, max_support: int = MAX_SUPPORT) -> YElement:
        return YElement(
            (self.y_monomial(max_support), self.tpoly())
            for _ in range(self.rng.randint(1, max_terms))
        )

    def classical_element(self, max_terms: int = 3, max_support: int = MAX_SUPPORT) -> ClassicalElement:
        return ClassicalElement(
            (self.y_monomial(max_support), self.nonzero())
            for _ in range(self.rng.randint(1, max_terms))
        )


__all__ = ["MAX_SUPPORT", "MAX_WEIGHT", "Sampler", "sample_seed"]
