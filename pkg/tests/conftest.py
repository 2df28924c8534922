"""Pytest configuration and fixtures."""

import os
import random

import pytest

from qt_screening.algebra.cartan import CartanData, load_cartan
from qt_screening.algebra.lattice import Window
from qt_screening.verify.sampling import Sampler


@pytest.fixture
def sl2() -> CartanData:
    """Provide the rank one datum."""
    return load_cartan("sl2")


@pytest.fixture
def a2() -> CartanData:
    return load_cartan("A2")


@pytest.fixture
def a3() -> CartanData:
    return load_cartan("A3")


@pytest.fixture
def b2() -> CartanData:
    """Provide B2, C = [[2, -1], [-2, 2]] with r = (2, 1)."""
    return load_cartan("B2")


@pytest.fixture
def g2() -> CartanData:
    return load_cartan("G2")


@pytest.fixture
def rng() -> random.Random:
    """Seeded random source so sampled tests are reproducible."""
    return random.Random(20240601)


@pytest.fixture
def window() -> Window:
    return Window(-6, 6)


@pytest.fixture
def make_sampler(rng: random.Random, window: Window):
    """Build a Sampler over a given Cartan datum sharing the seeded rng."""

    def _make(cd: CartanData) -> Sampler:
        return Sampler(rng, cd, window)

    return _make


@pytest.fixture
def clean_env(monkeypatch: pytest.MonkeyPatch, tmp_path):
    """Remove QTSCREEN_* variables and point the log directory at tmp_path."""
    for name in list(os.environ):
        if name.startswith("QTSCREEN_"):
            monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("QTSCREEN_LOG_DIRECTORY", str(tmp_path / "logs"))
    return tmp_path
