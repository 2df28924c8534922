"""Tests for suite status trackers."""

import io

from rich.console import Console

from qt_screening.verify.tracker import STATUS_ICONS, Prop4Tracker, PropertyTracker


def render(table) -> str:
    console = Console(file=io.StringIO(), width=200, record=True)
    console.print(table)
    return console.export_text()


class TestPropertyTracker:
    """Test PropertyTracker functionality."""

    def test_initial_state(self):
        tracker = PropertyTracker("binom", ["symmetric", "pascal"], {"symmetric": "Gaussian binomials"})
        assert tracker.items["symmetric"]["status"] == "pending"
        assert tracker.items["pascal"]["passed"] == 0
        assert tracker.table_title == "Suite: binom"

    def test_update_counts(self):
        tracker = PropertyTracker("binom", ["symmetric"], {})
        tracker.update("symmetric", "passed", "50 samples", passed=50, skipped=2)
        data = tracker.items["symmetric"]
        assert data["status"] == "passed"
        assert data["icon"] == STATUS_ICONS["passed"]
        assert data["passed"] == 50
        assert data["skipped"] == 2
        assert data["failed"] == 0

    def test_unknown_item_ignored(self):
        tracker = PropertyTracker("binom", ["symmetric"], {})
        tracker.update("other", "failed")
        assert list(tracker.items) == ["symmetric"]

    def test_table(self):
        tracker = PropertyTracker("binom", ["symmetric", "pascal"], {"symmetric": "Gaussian binomials"})
        tracker.update("pascal", "failed", "index 3", passed=4, failed=1)
        table = tracker.get_table()
        assert table.row_count == 2
        text = render(table)
        assert "Gaussian binomials" in text
        assert "FAILED" in text
        assert "PENDING" in text


class TestProp4Tracker:
    """Test Prop4Tracker functionality."""

    def test_beta_column(self):
        tracker = Prop4Tracker(["A2 W[1,0]", "A2 W[1,0]·W[2,0]"])
        tracker.update("A2 W[1,0]", "passed", "matches", beta=0)
        tracker.update("A2 W[1,0]·W[2,0]", "recorded", "new golden value", beta=-1)
        assert tracker.items["A2 W[1,0]"]["beta"] == "0"
        assert tracker.items["A2 W[1,0]·W[2,0]"]["icon"] == STATUS_ICONS["recorded"]
        text = render(tracker.get_table())
        assert "-1" in text
        assert "RECORDED" in text

    def test_missing_beta_keeps_dash(self):
        tracker = Prop4Tracker(["sl2 W[1,0]"])
        tracker.update("sl2 W[1,0]", "failed", "no beta", beta=None)
        assert tracker.items["sl2 W[1,0]"]["beta"] == "-"
