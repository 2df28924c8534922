"""Console entry point for qt-screening."""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from rich.logging import RichHandler
from rich.markup import escape

from qt_screening import __version__
from qt_screening.algebra.cartan import CartanData
from qt_screening.algebra.elements import Ring
from qt_screening.algebra.kernels import Decomposition, Flavor, decompose, generator, kt_witness
from qt_screening.algebra.screening import QuotientKind, screen
from qt_screening.config import OUTPUT_FORMATS, OutputSettings, RunConfig
from qt_screening.display import console, render_element, render_screener
from qt_screening.display.tables import decomposition_table, kernel_panel
from qt_screening.errors import QtScreeningError
from qt_screening.models import (
    KernelReport,
    encode_decomposition,
    encode_element,
    encode_screener,
    to_json,
)
from qt_screening.parsing import parse_element, parse_monomial
from qt_screening.verify import SuiteRunner, get_suite, suite_names

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT_ERROR = 2


WINDOW_VALUE = re.compile(r"-?\d+:-?\d+")


def _attach_window_values(argv: List[str]) -> List[str]:
    """Rewrite "--window -6:6" as "--window=-6:6" (argparse reads a leading "-" as an option)."""
    result: List[str] = []
    skip = False
    for index, arg in enumerate(argv):
        if skip:
            skip = False
            continue
        if arg in ("--window", "-w") and index + 1 < len(argv) and WINDOW_VALUE.fullmatch(argv[index + 1]):
            result.append(f"--window={argv[index + 1]}")
            skip = True
        else:
            result.append(arg)
    return result


def _common_parser() -> argparse.ArgumentParser:
    """Flags shared by every command; unset flags fall back to RunConfig's environment defaults."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--cartan",
        "-c",
        default=None,
        help="Cartan datum: name (A2, sl2, B2, A1xA1), comma-separated names, or JSON {\"C\": ..., \"r\": ...}",
    )
    common.add_argument("--window", "-w", default=None, help="Spectral window kmin:kmax (default: -6:6)")
    common.add_argument("--seed", type=int, default=None, help="Sampling seed (default: 0)")
    common.add_argument("--samples", "-n", type=int, default=None, help="Samples per property (default: 200)")
    common.add_argument("--format", "-f", dest="output_format", choices=OUTPUT_FORMATS, default=None)
    common.add_argument("--workers", type=int, default=None, help="Worker processes for verify (default: 1)")
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress (-v) or every rewriting step (-vv)",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """Create CLI argument parser."""
    parser = argparse.ArgumentParser(
        prog="qtscreen",
        description="qt-screening - t-analogues of screening operators on q,t-characters",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Commands:
  eval                Canonicalize an element of the hat, Y or classical ring
  screen              Apply a screening operator and reduce modulo its submodule
  epoly               Kernel generator E_i(m) of a flavor
  kernel              Kernel membership by decomposition, cross-checked by screening
  verify              Run a randomized property suite

Examples:
  qtscreen eval --cartan sl2 --ring hat "W[1,0]*(1+V[1,1])"
  qtscreen screen --kind classicalF --i 1 "Y[1,0]"
  qtscreen epoly --cartan A2 --flavor y --i 1 "Y[1,0]"
  qtscreen kernel --cartan A2 --flavor y --i all "Y[1,0] + Y[1,2]^-1*Y[2,1] + Y[2,3]^-1"
  qtscreen verify --suite kernel-hat --cartan B2 --window -6:6
  qtscreen verify --suite prop4 --cartan A2 --golden prop4_A2.json
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = _common_parser()
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    eval_parser = subparsers.add_parser(
        "eval",
        parents=[common],
        help="Parse and canonicalize an element",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    eval_parser.add_argument(
        "--ring", choices=[r.value for r in Ring], default=Ring.HAT.value, help="Ring of the element (default: hat)"
    )
    eval_parser.add_argument("expression", help="Element expression, e.g. \"(t^2+1)*Y[1,0]^-1\"")

    screen_parser = subparsers.add_parser(
        "screen",
        parents=[common],
        help="Screening operator followed by the quotient normal form",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    screen_parser.add_argument(
        "--kind", required=True, choices=[k.value for k in QuotientKind], help="Quotient (required)"
    )
    screen_parser.add_argument("--i", dest="node", type=int, required=True, help="Node (required)")
    screen_parser.add_argument("expression", help="Element of the quotient's ring")

    epoly_parser = subparsers.add_parser(
        "epoly",
        parents=[common],
        help="Kernel generator of an i-dominant monomial",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    epoly_parser.add_argument(
        "--flavor", choices=[f.value for f in Flavor], default=Flavor.HAT.value, help="Generator family (default: hat)"
    )
    epoly_parser.add_argument("--i", dest="node", type=int, required=True, help="Node (required)")
    epoly_parser.add_argument("monomial", help="i-dominant monomial")

    kernel_parser = subparsers.add_parser(
        "kernel",
        parents=[common],
        help="Membership in the kernel of a screening operator",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    kernel_parser.add_argument(
        "--flavor", choices=[f.value for f in Flavor], default=Flavor.Y.value, help="Generator family (default: y)"
    )
    kernel_parser.add_argument(
        "--i", dest="node", default="all", help="Node, or 'all' for the intersection over every node (default: all)"
    )
    kernel_parser.add_argument("expression", help="Element of the flavor's ring")

    verify_parser = subparsers.add_parser(
        "verify",
        parents=[common],
        help="Run a randomized property suite",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    verify_parser.add_argument("--suite", "-s", required=True, choices=suite_names(), help="Suite name (required)")
    verify_parser.add_argument(
        "--golden",
        type=Path,
        default=None,
        help="Golden file for the prop4 outcomes: recorded when absent, compared otherwise",
    )

    return parser


def configure_logging(verbosity: int) -> None:
    """RichHandler on the package logger: WARNING, INFO with -v, DEBUG with -vv."""
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG

    package_logger = logging.getLogger("qt_screening")
    package_logger.handlers.clear()
    package_logger.addHandler(RichHandler(console=console, show_path=False, markup=False))
    package_logger.setLevel(level)
    package_logger.propagate = False


def config_from_args(parsed: argparse.Namespace) -> RunConfig:
    """RunConfig from the environment, overridden by the flags that were given."""
    overrides: Dict[str, Any] = {}
    for name in ("cartan", "window", "seed", "samples", "output_format", "workers"):
        value = getattr(parsed, name, None)
        if value is not None:
            overrides[name] = value
    return RunConfig(**overrides)


def _emit_json(payload: Any) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _elements_json(ring: Ring, x: Any) -> Dict[str, Any]:
    return {"ring": ring.value, "terms": [t.model_dump(exclude_none=True) for t in encode_element(x)]}


# -- commands ----------------------------------------------------------------------------


def cmd_eval(config: RunConfig, cd: CartanData, parsed: argparse.Namespace) -> int:
    ring = Ring(parsed.ring)
    x = parse_element(parsed.expression, ring, cd)
    if config.output_format == "json":
        _emit_json(_elements_json(ring, x))
    else:
        console.print(render_element(x), markup=False, highlight=False)
    return EXIT_OK


def cmd_screen(config: RunConfig, cd: CartanData, parsed: argparse.Namespace) -> int:
    kind = QuotientKind(parsed.kind)
    x = parse_element(parsed.expression, kind.ring, cd)
    s = screen(cd, kind, parsed.node, x)
    if config.output_format == "json":
        print(to_json(encode_screener(s)))
    else:
        console.print(render_screener(s), markup=False, highlight=False)
    return EXIT_OK


def cmd_epoly(config: RunConfig, cd: CartanData, parsed: argparse.Namespace) -> int:
    flavor = Flavor(parsed.flavor)
    m = parse_monomial(parsed.monomial, flavor.ring, cd)
    e = generator(cd, parsed.node, m, flavor)
    if config.output_format == "json":
        _emit_json(_elements_json(flavor.ring, e))
    else:
        console.print(render_element(e), markup=False, highlight=False)
    return EXIT_OK


def _kernel_nodes(cd: CartanData, node: str) -> List[int]:
    if str(node).strip().lower() == "all":
        return list(cd.nodes)
    try:
        i = int(node)
    except ValueError:
        raise ValueError(f"--i must be a node number or 'all', got '{node}'") from None
    cd.check_node(i)
    return [i]


def kernel_report(
    cd: CartanData, flavor: Flavor, nodes: List[int], expression: str
) -> Tuple[KernelReport, List[Decomposition]]:
    """Both membership routes for the parsed expression, with the decompositions behind them."""
    x = parse_element(expression, flavor.ring, cd)
    decompositions = [decompose(cd, i, x, flavor) for i in nodes]
    screens = {i: screen(cd, flavor.quotient, i, x) for i in nodes}
    member = all(dec.is_member for dec in decompositions)
    nf_member = all(not s for s in screens.values())
    if member != nf_member:
        logger.warning(f"kernel routes disagree for {expression} on {cd}: decomposition={member}, nf={nf_member}")

    intersection: Optional[bool] = None
    witness: Optional[str] = None
    if sorted(nodes) == list(cd.nodes) and flavor in (Flavor.Y, Flavor.Y_PRIME):
        # the intersection over every node is the conjunction of the per-node verdicts
        intersection = member
        found = None if x.is_scalar() else kt_witness(cd, x)
        if found is not None:
            witness = render_element(type(x)({found: 1}))
            logger.info(f"maximal monomial {witness} is not dominant for every node")

    report = KernelReport(
        cartan=str(cd),
        flavor=flavor.value,
        nodes=nodes,
        expression=render_element(x),
        member=member,
        nf_member=nf_member,
        agree=member == nf_member,
        decompositions=[encode_decomposition(dec) for dec in decompositions],
        screen_nf={str(i): render_screener(s) for i, s in screens.items()},
        in_kt=intersection,
        kt_witness=witness,
    )
    return report, decompositions


def cmd_kernel(config: RunConfig, cd: CartanData, parsed: argparse.Namespace) -> int:
    flavor = Flavor(parsed.flavor)
    nodes = _kernel_nodes(cd, parsed.node)
    report, decompositions = kernel_report(cd, flavor, nodes, parsed.expression)
    if config.output_format == "json":
        print(to_json(report))
    else:
        for dec in decompositions:
            console.print(decomposition_table(dec))
        console.print(kernel_panel(report))
    return EXIT_OK if report.agree else EXIT_FAILURE


def cmd_verify(config: RunConfig, parsed: argparse.Namespace) -> int:
    suite = get_suite(parsed.suite)
    runner = SuiteRunner(
        suite,
        config,
        settings=OutputSettings(),
        golden=parsed.golden,
        show_progress=config.output_format == "text",
    )
    return_code = runner.run()
    if config.output_format == "json" and runner.report is not None:
        print(to_json(runner.report))
    return return_code


def main(args: Optional[List[str]] = None) -> int:
    """Entry point for console_scripts; returns the process exit code."""
    parser = build_parser()
    argv = sys.argv[1:] if args is None else list(args)
    parsed = parser.parse_args(args=_attach_window_values(argv))

    if parsed.command is None:
        parser.print_help()
        return EXIT_INPUT_ERROR

    configure_logging(parsed.verbose)

    try:
        config = config_from_args(parsed)
        if parsed.command == "verify":
            return cmd_verify(config, parsed)

        cd = config.cartan_data()
        if parsed.command == "eval":
            return cmd_eval(config, cd, parsed)
        if parsed.command == "screen":
            return cmd_screen(config, cd, parsed)
        if parsed.command == "epoly":
            return cmd_epoly(config, cd, parsed)
        if parsed.command == "kernel":
            return cmd_kernel(config, cd, parsed)
    except (QtScreeningError, ValueError, KeyError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else e
        console.print(f"[red]Error:[/red] {escape(str(message))}", style="bold red")
        return EXIT_INPUT_ERROR

    console.print(f"[red]Error:[/red] Unknown command {parsed.command}", style="bold red")
    return EXIT_INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
