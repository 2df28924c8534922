"""Tests for the suite runner and the registered property suites."""

import json
from pathlib import Path

import pytest

from qt_screening.algebra.rings import is_dominant, wt_i
from qt_screening.config import OutputSettings, RunConfig
from qt_screening.errors import WindowTooSmallError
from qt_screening.verify import SuiteRunner, get_suite, run_sample, suite_names
from qt_screening.verify.sampling import MAX_WEIGHT
from qt_screening.verify.suites import PropertyCheck, Suite

ALL_SUITES = [
    "leibniz",
    "bicharacter",
    "binom",
    "kernel-hat",
    "kernel-y",
    "kernel-classical",
    "diagrams",
    "quotient",
    "involution",
    "order",
    "prop4",
    "lemma7",
    "lemma13",
]


@pytest.fixture
def settings(clean_env) -> OutputSettings:
    return OutputSettings(_env_file=None, golden_directory=str(clean_env / "golden"))


def make_runner(name: str, settings: OutputSettings, **config) -> SuiteRunner:
    config.setdefault("samples", 3)
    return SuiteRunner(get_suite(name), RunConfig(**config), settings=settings, show_progress=False)


def test_suite_registry():
    """Test every suite is registered under its name."""
    assert suite_names() == ALL_SUITES
    with pytest.raises(KeyError, match="known: leibniz"):
        get_suite("nope")


class TestRunSample:
    """Test single-sample execution."""

    def test_passing_sample(self):
        outcome = run_sample(("binom", "t-integer-additive", "A2", "-6:6", 0, 0))
        assert outcome.status == "passed"
        assert outcome.cartan == "A2"

    def _patched(self, mocker, fn):
        suite = Suite("custom", "test suite", (PropertyCheck("custom-check", "Lemma 1", fn),))
        mocker.patch("qt_screening.verify.runner.get_suite", return_value=suite)
        return run_sample(("custom", "custom-check", "sl2", "-6:6", 0, 3))

    def test_failure_text(self, mocker):
        outcome = self._patched(mocker, lambda ctx: "got 1, expected 2")
        assert outcome.status == "failed"
        assert outcome.detail == "got 1, expected 2"
        assert outcome.index == 3

    def test_exception_is_failure(self, mocker):
        def boom(ctx):
            raise RuntimeError("boom")

        outcome = self._patched(mocker, boom)
        assert outcome.status == "failed"
        assert outcome.detail == "RuntimeError: boom"

    def test_skip(self, mocker):
        outcome = self._patched(mocker, lambda ctx: ctx.skip("not dominant"))
        assert outcome.status == "skipped"
        assert outcome.detail == "not dominant"

    def test_window_too_small_counted_apart(self, mocker):
        def too_small(ctx):
            raise WindowTooSmallError("needs k=9")

        outcome = self._patched(mocker, too_small)
        assert outcome.status == "window"
        assert outcome.detail.startswith("window too small")


class TestSuiteRunner:
    """Test SuiteRunner aggregation, logging and reports."""

    def test_binom_passes(self, settings, clean_env):
        runner = make_runner("binom", settings, cartan="A2", samples=5)
        assert runner.run() == 0
        report = runner.report
        # four exhaustive grid checks run once, the sampled one five times
        assert report.passed == 9
        assert report.failed == 0
        assert report.counterexample is None
        assert report.config["cartan"] == ["A2"]
        assert runner.tracker.items["pascal-identity"]["status"] == "passed"

        log_text = runner.log_file.read_text()
        assert runner.log_file.parent == clean_env / "logs"
        assert runner.log_file.name.startswith("verify_binom_")
        assert log_text.startswith("=" * 70)
        assert "Exit Code: 0" in log_text

    def test_deterministic(self, settings):
        first = make_runner("order", settings, cartan="A2", seed=11)
        second = make_runner("order", settings, cartan="A2", seed=11)
        first.run()
        second.run()
        assert first.report == second.report
        assert {name: [(o.status, o.detail) for o in outs] for name, outs in first.outcomes.items()} == {
            name: [(o.status, o.detail) for o in outs] for name, outs in second.outcomes.items()
        }

    def test_failure_reported(self, settings, mocker):
        suite = Suite("custom", "test suite", (PropertyCheck("custom-check", "Lemma 1", lambda ctx: "wrong"),))
        mocker.patch("qt_screening.verify.runner.get_suite", return_value=suite)
        runner = SuiteRunner(suite, RunConfig(cartan="sl2", samples=2), settings=settings, show_progress=False)
        assert runner.run() == 1
        assert runner.report.failed == 2
        assert runner.report.counterexample.detail == "wrong"
        assert "FAILED A1 #0: wrong" in runner.log_file.read_text()

    def test_window_starved_property_fails(self, settings, mocker):
        def too_small(ctx):
            raise WindowTooSmallError("needs k=9")

        suite = Suite("custom", "test suite", (PropertyCheck("custom-check", "Lemma 1", too_small),))
        mocker.patch("qt_screening.verify.runner.get_suite", return_value=suite)
        runner = SuiteRunner(suite, RunConfig(cartan="sl2", samples=3), settings=settings, show_progress=False)
        assert runner.run() == 1
        outcome = runner.report.properties[0]
        assert (outcome.passed, outcome.skipped, outcome.window_skipped) == (0, 0, 3)
        assert runner.report.failed == 0
        assert runner.report.window_starved == ["custom-check"]
        assert runner.tracker.items["custom-check"]["status"] == "window"
        assert "window=3" in runner.log_file.read_text()

    def test_partial_window_skips_pass(self, settings, mocker):
        def sometimes(ctx):
            if ctx.index % 2:
                raise WindowTooSmallError("needs k=9")
            return None

        suite = Suite("custom", "test suite", (PropertyCheck("custom-check", "Lemma 1", sometimes),))
        mocker.patch("qt_screening.verify.runner.get_suite", return_value=suite)
        runner = SuiteRunner(suite, RunConfig(cartan="sl2", samples=4), settings=settings, show_progress=False)
        assert runner.run() == 0
        outcome = runner.report.properties[0]
        assert (outcome.passed, outcome.window_skipped) == (2, 2)
        assert runner.report.window_starved == []

    def test_simply_laced_checks_skipped(self, settings):
        runner = make_runner("lemma7", settings, cartan="B2")
        assert runner.run() == 0
        outcome = runner.report.properties[0]
        assert outcome.passed == 0
        assert outcome.skipped == 3
        assert runner.tracker.items["star-power"]["status"] == "skipped"

    def test_several_cartans(self, settings):
        runner = make_runner("bicharacter", settings, cartan="sl2,A2")
        assert runner.run() == 0
        assert runner.report.config["cartan"] == ["A1", "A2"]
        assert all(p.cartans == ["A1", "A2"] for p in runner.report.properties)


@pytest.mark.parametrize("name", [s for s in ALL_SUITES if s != "prop4"])
@pytest.mark.parametrize("cartan", ["A2", "B2"])
def test_suite_holds(name, cartan, settings):
    """Test each suite's identities on a few samples."""
    runner = make_runner(name, settings, cartan=cartan, samples=2, seed=7)
    code = runner.run()
    assert runner.report.counterexample is None, runner.report.counterexample
    assert code == 0


def test_suites_on_g2(settings):
    """Test the non simply-laced kernel identities on G2."""
    for name in ("kernel-hat", "kernel-y", "diagrams"):
        runner = make_runner(name, settings, cartan="G2", samples=2, seed=3)
        assert runner.run() == 0, runner.report.counterexample


class TestGolden:
    """Test recording and comparing the factorization outcomes."""

    def test_record_then_match(self, settings, clean_env):
        golden = clean_env / "prop4.json"
        runner = SuiteRunner(
            get_suite("prop4"), RunConfig(cartan="A2", samples=2), settings=settings, golden=golden, show_progress=False
        )
        assert runner.run() == 0
        assert runner.golden_status == "recorded"
        rows = json.loads(golden.read_text())
        assert [row["monomial"] for row in rows][0] == "W[1,0]·W[2,0]"
        assert runner.report.extra["golden"] == "recorded"
        assert len(runner.report.extra["golden_cases"]) == len(rows)

        again = SuiteRunner(
            get_suite("prop4"), RunConfig(cartan="A2", samples=2), settings=settings, golden=golden, show_progress=False
        )
        assert again.run() == 0
        assert again.golden_status == "matched"

    def test_mismatch_fails(self, settings, clean_env):
        golden = clean_env / "prop4.json"
        golden.write_text(json.dumps([{"node": 1, "monomial": "W[1,0]", "beta": 99}]))
        runner = SuiteRunner(
            get_suite("prop4"), RunConfig(cartan="A2", samples=1), settings=settings, golden=golden, show_progress=False
        )
        assert runner.run() == 1
        assert runner.golden_status == "mismatch"
        assert runner.report.counterexample.check == "golden-cases"

    def test_bare_name_uses_golden_directory(self, settings, clean_env):
        runner = SuiteRunner(
            get_suite("prop4"),
            RunConfig(cartan="A2", samples=1),
            settings=settings,
            golden=Path("prop4_A2.json"),
            show_progress=False,
        )
        runner.run()
        assert (clean_env / "golden" / "prop4_A2.json").exists()

    def test_unavailable_off_ade(self, settings, clean_env):
        golden = clean_env / "prop4.json"
        runner = SuiteRunner(
            get_suite("prop4"), RunConfig(cartan="B2", samples=2), settings=settings, golden=golden, show_progress=False
        )
        assert runner.run() == 0
        assert runner.golden_status == "unavailable"
        assert runner.report.passed == 0
        assert not golden.exists()


@pytest.mark.slow
def test_worker_pool_matches_serial(settings):
    """Test that worker processes produce the serial report."""
    serial = make_runner("leibniz", settings, cartan="A2", samples=4, seed=5)
    pooled = make_runner("leibniz", settings, cartan="A2", samples=4, seed=5, workers=2)
    serial.run()
    pooled.run()
    assert serial.report.properties == pooled.report.properties


class TestSamplerWeights:
    """Test the weight caps on sampled kernel inputs."""

    def test_dominant_hat_weight_capped(self, g2, make_sampler):
        sampler = make_sampler(g2)
        for _ in range(200):
            i = sampler.node()
            m = sampler.dominant_hat(i)
            assert is_dominant(g2, m, i)
            assert wt_i(g2, m, i) <= MAX_WEIGHT

    def test_dominant_y_weight_capped(self, g2, make_sampler):
        sampler = make_sampler(g2)
        for _ in range(200):
            i = sampler.node()
            m = sampler.dominant_y(i)
            assert is_dominant(g2, m, i)
            assert wt_i(g2, m, i) <= MAX_WEIGHT

    def test_bounded_hat_element(self, g2, make_sampler):
        sampler = make_sampler(g2)
        for _ in range(50):
            x = sampler.hat_element(bounded=True)
            assert all(sampler.positive_weight(m) <= MAX_WEIGHT for m in x.monomials())

    @pytest.mark.parametrize("prop", ["decompose-exact", "routes-agree", "span-killed"])
    def test_g2_hat_kernel_samples_finish(self, prop):
        outcomes = [run_sample(("kernel-hat", prop, "G2", "-6:6", 0, index)) for index in range(20)]
        assert {o.status for o in outcomes} <= {"passed", "skipped"}, [o.detail for o in outcomes]
