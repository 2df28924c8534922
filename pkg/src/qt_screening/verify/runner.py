"""Suite runner: samples every property of a suite and aggregates the outcomes."""

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple

from rich.live import Live
from rich.panel import Panel

from qt_screening.algebra.cartan import CartanData, load_cartan
from qt_screening.algebra.lattice import Window
from qt_screening.config import OutputSettings, RunConfig
from qt_screening.display import console
from qt_screening.errors import WindowTooSmallError
from qt_screening.models import Counterexample, PropertyOutcome, SuiteReport
from qt_screening.verify.sampling import Sampler, sample_seed
from qt_screening.verify.suites import (
    CheckContext,
    PropertyCheck,
    SampleSkipped,
    Suite,
    get_suite,
)
from qt_screening.verify.tracker import Prop4Tracker, PropertyTracker

logger = logging.getLogger(__name__)

SAMPLE_STATUSES = ("passed", "failed", "skipped", "window")

# (suite, property, cartan spec, window, seed, sample index)
Task = Tuple[str, str, str, str, int, int]


@dataclass
class SampleOutcome:
    """Result of one property check on one sampled instance."""

    check: str
    cartan: str
    index: int
    status: str
    detail: str = ""
    record: Dict[str, Any] = field(default_factory=dict)


def run_sample(task: Task) -> SampleOutcome:
    """Run one sample; module level so worker processes can pickle it."""
    suite_name, prop_name, spec, window_text, seed, index = task
    prop = get_suite(suite_name).check(prop_name)
    cd = load_cartan(spec)
    window = Window.parse(window_text)
    sampler = Sampler.seeded(sample_seed(seed, suite_name, prop_name, str(cd), index), cd, window)
    ctx = CheckContext(cd, window, sampler, index)

    try:
        failure = prop.check(ctx)
    except SampleSkipped as e:
        return SampleOutcome(prop_name, str(cd), index, "skipped", str(e))
    except WindowTooSmallError as e:
        logger.debug(f"[{suite_name}] {prop_name} #{index}: {e}")
        return SampleOutcome(prop_name, str(cd), index, "window", f"window too small: {e}")
    except Exception as e:
        logger.debug(f"[{suite_name}] {prop_name} #{index} raised", exc_info=True)
        return SampleOutcome(prop_name, str(cd), index, "failed", f"{type(e).__name__}: {e}", ctx.record)

    if failure is None:
        return SampleOutcome(prop_name, str(cd), index, "passed", record=ctx.record)
    return SampleOutcome(prop_name, str(cd), index, "failed", failure, ctx.record)


class SuiteRunner:
    """Runs one verification suite over every configured Cartan datum."""

    def __init__(
        self,
        suite: Suite,
        config: RunConfig,
        settings: Optional[OutputSettings] = None,
        golden: Optional[Path] = None,
        show_progress: bool = True,
    ):
        """Initialize the runner.

        Args:
            suite: Suite to run
            config: Run parameters (Cartan specs, window, seed, samples, workers)
            settings: Log and golden directories
            golden: Golden file for the recorded factorization outcomes (prop4 only)
            show_progress: Render the live tracker table and the results panel
        """
        self.suite = suite
        self.config = config
        self.settings = settings or OutputSettings()
        self.golden = golden
        self.show_progress = show_progress
        self.specs = config.cartan_specs()
        self.cartans: List[CartanData] = [load_cartan(spec) for spec in self.specs]
        self.tracker = PropertyTracker(
            suite.name,
            [prop.name for prop in suite.checks],
            {prop.name: prop.anchor for prop in suite.checks},
        )
        self.outcomes: Dict[str, List[SampleOutcome]] = {}
        self.log_lines: List[str] = []
        self.golden_status: Optional[str] = None
        self.report: Optional[SuiteReport] = None

        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        self.log_file = self.settings.log_dir() / f"{self.log_prefix}_{timestamp}.log"

    @property
    def log_prefix(self) -> str:
        return f"verify_{self.suite.name}"

    # -- sampling ------------------------------------------------------------------------

    def _tasks(self, prop: PropertyCheck, spec: str) -> List[Task]:
        return [
            (self.suite.name, prop.name, spec, self.config.window, self.config.seed, index)
            for index in range(prop.sample_count(self.config.samples))
        ]

    def _run_property(
        self, prop: PropertyCheck, executor: Optional[ProcessPoolExecutor]
    ) -> List[SampleOutcome]:
        outcomes: List[SampleOutcome] = []
        for spec, cd in zip(self.specs, self.cartans):
            tasks = self._tasks(prop, spec)
            if prop.simply_laced and not cd.is_simply_laced:
                outcomes.extend(
                    SampleOutcome(prop.name, str(cd), index, "skipped", "needs a simply-laced datum")
                    for _, _, _, _, _, index in tasks
                )
                continue
            results: Iterable[SampleOutcome]
            if executor is not None:
                results = executor.map(run_sample, tasks, chunksize=max(1, len(tasks) // 32))
            else:
                results = map(run_sample, tasks)
            outcomes.extend(sorted(results, key=lambda o: o.index))
        return outcomes

    def _summarize_property(self, prop: PropertyCheck, outcomes: List[SampleOutcome]) -> None:
        counts = {status: sum(1 for o in outcomes if o.status == status) for status in SAMPLE_STATUSES}
        failures = [o for o in outcomes if o.status == "failed"]
        if failures:
            status = "failed"
            details = f"{failures[0].cartan} #{failures[0].index}"
            logger.warning(f"[{self.suite.name}] {prop.name}: {failures[0].detail}")
        elif counts["passed"] == 0 and counts["window"]:
            status = "window"
            details = f"no sample fits window {self.config.window}"
            logger.warning(f"[{self.suite.name}] {prop.name}: {counts['window']} samples need a wider --window")
        elif counts["passed"] == 0:
            status = "skipped"
            details = outcomes[0].detail if outcomes else "no samples"
        else:
            status = "passed"
            details = ""
        self.tracker.update(prop.name, status, details, **counts)
        logger.info(
            f"[{self.suite.name}] {prop.name}: {counts['passed']} passed, "
            f"{counts['failed']} failed, {counts['skipped']} skipped, {counts['window']} outside the window"
        )
        self.log_lines.append(
            f"{prop.name} ({prop.anchor}): passed={counts['passed']} failed={counts['failed']} "
            f"skipped={counts['skipped']} window={counts['window']}"
        )
        for o in failures:
            self.log_lines.append(f"  FAILED {o.cartan} #{o.index}: {o.detail}")

    def _execute(self, executor: Optional[ProcessPoolExecutor], live: Optional[Live]) -> None:
        for prop in self.suite.checks:
            self.tracker.update(prop.name, "running", "sampling")
            if live is not None:
                live.update(self.tracker.get_table())
            outcomes = self._run_property(prop, executor)
            self.outcomes[prop.name] = outcomes
            self._summarize_property(prop, outcomes)
            if live is not None:
                live.update(self.tracker.get_table())

    # -- report --------------------------------------------------------------------------

    def _records(self, prop_name: str, key: str) -> List[Any]:
        return [o.record[key] for o in self.outcomes.get(prop_name, []) if key in o.record]

    def _extra(self) -> Dict[str, Any]:
        if self.suite.name != "prop4":
            return {}
        golden_rows = [row for rows in self._records("golden-cases", "rows") for row in rows]
        random_rows = self._records("random-dominant", "row")
        extra: Dict[str, Any] = {"golden_cases": golden_rows, "random": random_rows}
        if self.golden_status is not None:
            extra["golden"] = self.golden_status
        return extra

    def _check_golden(self) -> bool:
        """Record the golden rows when the file is absent, else compare; False on mismatch."""
        if self.golden is None:
            return True
        rows = [row for rows in self._records("golden-cases", "rows") for row in rows]
        if not rows:
            logger.warning(f"No golden rows produced; {self.golden} left untouched")
            self.golden_status = "unavailable"
            return True

        path = self.golden
        if not path.is_absolute() and path.parent == Path("."):
            path = self.settings.golden_dir() / path

        if not path.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(rows, indent=2, sort_keys=True) + "\n")
            logger.info(f"Recorded {len(rows)} golden rows to {path}")
            self.golden_status = "recorded"
            return True

        stored = json.loads(path.read_text())
        if stored == rows:
            self.golden_status = "matched"
            return True
        logger.warning(f"Golden rows differ from {path}")
        self.golden_status = "mismatch"
        self.log_lines.append(f"GOLDEN MISMATCH against {path}")
        return False

    def build_report(self, golden_ok: bool = True) -> SuiteReport:
        properties: List[PropertyOutcome] = []
        counterexample: Optional[Counterexample] = None
        for prop in self.suite.checks:
            outcomes = self.outcomes.get(prop.name, [])
            properties.append(
                PropertyOutcome(
                    name=prop.name,
                    anchor=prop.anchor,
                    cartans=[str(cd) for cd in self.cartans],
                    passed=sum(1 for o in outcomes if o.status == "passed"),
                    failed=sum(1 for o in outcomes if o.status == "failed"),
                    skipped=sum(1 for o in outcomes if o.status == "skipped"),
                    window_skipped=sum(1 for o in outcomes if o.status == "window"),
                )
            )
            if counterexample is None:
                first = next((o for o in outcomes if o.status == "failed"), None)
                if first is not None:
                    counterexample = Counterexample(
                        check=prop.name, anchor=prop.anchor, cartan=first.cartan, index=first.index, detail=first.detail
                    )

        failed = sum(p.failed for p in properties)
        if not golden_ok:
            failed += 1
            if counterexample is None:
                counterexample = Counterexample(
                    check="golden-cases",
                    anchor=self.suite.check("golden-cases").anchor,
                    cartan="A2",
                    index=0,
                    detail="recorded factorization outcomes differ from the golden file",
                )

        return SuiteReport(
            suite=self.suite.name,
            config=self.config.as_report_dict(),
            passed=sum(p.passed for p in properties),
            failed=failed,
            counterexample=counterexample,
            properties=properties,
            anchors=self.suite.anchors,
            extra=self._extra(),
        )

    # -- display -------------------------------------------------------------------------

    def show_config(self) -> None:
        config_text = f"""[cyan]Suite:[/cyan]     {self.suite.name} ({self.suite.description})
[cyan]Cartan:[/cyan]    {', '.join(str(cd) for cd in self.cartans)}
[cyan]Window:[/cyan]    {self.config.lattice_window}
[cyan]Samples:[/cyan]   {self.config.samples}   [cyan]Seed:[/cyan] {self.config.seed}   [cyan]Workers:[/cyan] {self.config.workers}"""
        console.print(Panel(config_text, title="Verification", border_style="blue"))
        console.print()

    def prop4_table(self) -> Prop4Tracker:
        """Factorization instances with their beta values."""
        rows = self._extra().get("golden_cases", []) + self._extra().get("random", [])
        labels = [f"{row['node']}: {row['monomial']}" for row in rows]
        tracker = Prop4Tracker(list(dict.fromkeys(labels)))
        for label, row in zip(labels, rows):
            if row["matches"]:
                tracker.update(label, "passed", f"{row['factors']} factors", beta=row["beta"])
            else:
                diff = row.get("first_difference", {})
                details = f"differs at {diff['monomial']}: {diff['got']} vs {diff['want']}" if diff else ""
                tracker.update(label, "recorded", details, beta=row["beta"])
        return tracker

    def get_results_panel(self, return_code: int) -> Panel:
        report = self.report
        assert report is not None
        lines = [
            f"[cyan]Passed:[/cyan]  {report.passed}",
            f"[cyan]Failed:[/cyan]  {report.failed}",
        ]
        if self.golden_status is not None:
            lines.append(f"[cyan]Golden:[/cyan]  {self.golden_status}")
        if report.counterexample is not None:
            ce = report.counterexample
            lines.append("")
            lines.append(f"[red]First counterexample:[/red] {ce.check} ({ce.anchor}) on {ce.cartan} #{ce.index}")
            lines.append(ce.detail)
        lines.append("")
        lines.append(f"[dim]Log: {self.log_file}[/dim]")

        if return_code == 0:
            return Panel("\n".join(lines), title="✓ All properties hold", border_style="green")
        return Panel("\n".join(lines), title="✗ Property failures", border_style="red")

    # -- entry point ---------------------------------------------------------------------

    def run(self) -> int:
        """Run the suite; returns 0 when every property holds, 1 otherwise."""
        logger.info(
            f"Running suite {self.suite.name} on {', '.join(self.specs)} "
            f"with {self.config.samples} samples, seed {self.config.seed}"
        )
        if self.show_progress:
            self.show_config()

        executor = ProcessPoolExecutor(max_workers=self.config.workers) if self.config.workers > 1 else None
        try:
            if self.show_progress:
                with Live(self.tracker.get_table(), console=console, refresh_per_second=4) as live:
                    self._execute(executor, live)
            else:
                self._execute(executor, None)
        finally:
            if executor is not None:
                executor.shutdown()

        golden_ok = self._check_golden()
        self.report = self.build_report(golden_ok)
        starved = self.report.window_starved
        if starved:
            logger.warning(f"No sample of {', '.join(starved)} fit window {self.config.window}; widen --window")
        return_code = 0 if self.report.failed == 0 and not starved else 1

        if self.show_progress:
            console.print()
            if self.suite.name == "prop4":
                console.print(self.prop4_table().get_table())
                console.print()
            console.print(self.get_results_panel(return_code))

        self._save_log(return_code)
        return return_code

    def _save_log(self, return_code: int) -> None:
        try:
            with open(self.log_file, "w") as f:
                f.write(f"{'='*70}\n")
                f.write(f"Verification Suite {self.suite.name} Log\n")
                f.write(f"{'='*70}\n")
                f.write(f"Timestamp: {datetime.now().isoformat()}\n")
                f.write(f"Cartan: {', '.join(str(cd) for cd in self.cartans)}\n")
                f.write(f"Window: {self.config.window}  Seed: {self.config.seed}  Samples: {self.config.samples}\n")
                f.write(f"Exit Code: {return_code}\n")
                f.write(f"{'='*70}\n\n")
                f.write("\n".join(self.log_lines))
                f.write("\n")
        except OSError as e:
            logger.warning(f"Could not save log: {e}")


__all__ = ["SampleOutcome", "SuiteRunner", "Task", "run_sample"]
