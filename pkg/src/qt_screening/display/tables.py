"""Rich tables and panels for kernel reports and decompositions."""

from typing import Any

from rich.panel import Panel
from rich.table import Table

from qt_screening.algebra.kernels import Decomposition
from qt_screening.display.render import render_coefficient, render_element, render_monomial
from qt_screening.models import KernelReport


def decomposition_table(dec: Decomposition) -> Table:
    """Dominant monomials with their coefficients, plus the remainder row."""
    table = Table(title=f"Decomposition at node {dec.node} ({dec.flavor.value})", expand=True)
    table.add_column("Monomial", style="cyan", no_wrap=True)
    table.add_column("Coefficient", style="magenta")

    for m, c in dec.dominant_part.items():
        table.add_row(render_monomial(m), render_coefficient(c))
    remainder = render_element(dec.remainder) if dec.remainder is not None else "0"
    table.add_row("[dim]remainder[/dim]", remainder)
    return table


def kernel_panel(report: KernelReport) -> Panel:
    """Membership verdicts of both routes."""
    verdict = "[green]member[/green]" if report.member else "[red]not a member[/red]"
    agree = "[green]agree[/green]" if report.agree else "[red]DISAGREE[/red]"
    lines = [
        f"Expression: {report.expression}",
        f"Cartan: {report.cartan}   Flavor: {report.flavor}   Nodes: {report.nodes}",
        f"Decomposition route: {verdict}",
        f"Normal form route: {'member' if report.nf_member else 'not a member'} ({agree})",
    ]
    for node, text in report.screen_nf.items():
        lines.append(f"  screen nf at node {node}: {text}")
    if report.in_kt is not None:
        lines.append(f"Intersection over all nodes: {'member' if report.in_kt else 'not a member'}")
    if report.kt_witness is not None:
        lines.append(f"  non-dominant maximal monomial: {report.kt_witness}")
    border = "green" if report.agree else "red"
    return Panel("\n".join(lines), title="Kernel Membership", border_style=border)


def summarize(value: Any) -> str:
    """One-line summary of a computed value for log messages."""
    text = str(value)
    if len(text) > 100:
        return f"{text[:100]}..."
    return text
