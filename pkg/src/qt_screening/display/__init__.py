"""Text rendering and rich output."""

from rich.console import Console

from qt_screening.display.render import (
    render_coefficient,
    render_element,
    render_monomial,
    render_screener,
    render_tpoly,
)

console = Console(legacy_windows=False)

__all__ = [
    "console",
    "render_coefficient",
    "render_element",
    "render_monomial",
    "render_screener",
    "render_tpoly",
]
