"""Configuration management for qt-screening runs."""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Literal

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

from qt_screening.algebra.cartan import CartanData, load_cartan
from qt_screening.algebra.lattice import Window

# Load environment variables from .env file
load_dotenv()

OUTPUT_FORMATS = ("text", "json")


def _int_env(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or not value.strip():
        return default
    try:
        return int(value)
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer, got '{value}'") from exc


@dataclass
class RunConfig:
    """
    Configuration for one CLI invocation.

    Attributes:
        cartan: Cartan datum name ("A2", "sl2", "B2", "A1xA1") or JSON object
        window: Spectral window "kmin:kmax" used for sampling and comparisons
        seed: Seed for the reproducible samplers
        samples: Random instances per property
        output_format: "text" or "json"
        workers: Worker processes for suite sampling (1 runs in-process)
    """

    cartan: str = field(default_factory=lambda: os.getenv("QTSCREEN_CARTAN", "A2"))

    window: str = field(default_factory=lambda: os.getenv("QTSCREEN_WINDOW", "-6:6"))

    seed: int = field(default_factory=lambda: _int_env("QTSCREEN_SEED", 0))

    samples: int = field(default_factory=lambda: _int_env("QTSCREEN_SAMPLES", 200))

    output_format: Literal["text", "json"] = field(
        default_factory=lambda: os.getenv("QTSCREEN_FORMAT", "text")  # type: ignore
    )

    workers: int = field(default_factory=lambda: _int_env("QTSCREEN_WORKERS", 1))

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        """Validate configuration and raise ValueError if invalid."""
        if not self.cartan or not str(self.cartan).strip():
            raise ValueError("cartan is required")

        # Window.parse raises ValueError on "a:b" with a > b or bad syntax
        Window.parse(self.window)

        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")

        if self.samples < 1:
            raise ValueError(f"samples must be positive, got {self.samples}")

        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"output_format must be 'text' or 'json', got '{self.output_format}'")

        if self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}")

    @property
    def lattice_window(self) -> Window:
        return Window.parse(self.window)

    def cartan_specs(self) -> List[str]:
        """Individual Cartan specs: a comma-separated list of names, or one JSON object."""
        text = self.cartan.strip()
        if text.startswith("{"):
            return [text]
        return [part.strip() for part in text.split(",") if part.strip()]

    def cartan_data(self) -> CartanData:
        """Resolve the first Cartan spec (raises CartanError for unknown or invalid data)."""
        return load_cartan(self.cartan_specs()[0])

    def as_report_dict(self) -> Dict[str, Any]:
        """Deterministic echo of the run parameters for JSON reports."""
        data = [load_cartan(spec) for spec in self.cartan_specs()]
        return {
            "cartan": [str(cd) for cd in data],
            "matrix": [[list(row) for row in cd.matrix] for cd in data],
            "symmetrizers": [list(cd.symmetrizers) for cd in data],
            "window": str(self.lattice_window),
            "seed": self.seed,
            "samples": self.samples,
        }


class OutputSettings(BaseSettings):
    """Where run logs and golden files go."""

    model_config = SettingsConfigDict(env_file=".env", env_prefix="QTSCREEN_", extra="ignore")

    log_directory: str = "logs"
    golden_directory: str = "tests/golden"

    def log_dir(self) -> Path:
        """Log directory, created on demand."""
        path = Path(self.log_directory)
        path.mkdir(parents=True, exist_ok=True)
        return path

    def golden_dir(self) -> Path:
        return Path(self.golden_directory)


__all__ = ["OUTPUT_FORMATS", "OutputSettings", "RunConfig"]
