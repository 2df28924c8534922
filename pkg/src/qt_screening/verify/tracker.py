"""Status trackers for verification suites."""

from abc import ABC, abstractmethod
from typing import Any, Dict, List

from rich.table import Table

STATUS_ICONS = {
    "pending": "⏸",
    "running": "▶",
    "passed": "✓",
    "failed": "✗",
    "skipped": "⊘",
    "window": "⚠",
    "recorded": "●",
}

STATUS_STYLES = {
    "pending": "dim",
    "running": "yellow",
    "passed": "green",
    "failed": "red",
    "skipped": "dim",
    "window": "yellow",
    "recorded": "blue",
}


class BaseTracker(ABC):
    """Abstract base class for all status trackers."""

    def __init__(self, items: List[str]):
        """Initialize base tracker.

        Args:
            items: Names of the tracked checks
        """
        self.items = self._initialize_items(items)

    @abstractmethod
    def _initialize_items(self, items: List[str]) -> Dict[str, Dict[str, Any]]:
        """Initialize the tracking dictionary."""
        pass

    def update(self, item: str, status: str, details: str = "", **kwargs: Any) -> None:
        """Update the status of one tracked check.

        Args:
            item: Check name
            status: New status value
            details: Optional status details
            **kwargs: Additional fields specific to the tracker type
        """
        if item in self.items:
            self._update_item(item, status, details, **kwargs)

    @abstractmethod
    def _update_item(self, item: str, status: str, details: str, **kwargs: Any) -> None:
        pass

    @abstractmethod
    def get_table(self) -> Table:
        """Generate a Rich table of the current status."""
        pass

    @property
    @abstractmethod
    def table_title(self) -> str:
        pass

    @property
    def status_icons(self) -> Dict[str, str]:
        return STATUS_ICONS

    def get_icon(self, status: str) -> str:
        return self.status_icons.get(status, "•")


class PropertyTracker(BaseTracker):
    """Pass/fail counts per property of a suite."""

    def __init__(self, suite: str, items: List[str], anchors: Dict[str, str]):
        self.suite = suite
        self.anchors = anchors
        super().__init__(items)

    @property
    def table_title(self) -> str:
        return f"Suite: {self.suite}"

    def _initialize_items(self, items: List[str]) -> Dict[str, Dict[str, Any]]:
        return {
            item: {
                "status": "pending",
                "details": "Waiting to start",
                "icon": self.get_icon("pending"),
                "passed": 0,
                "failed": 0,
                "skipped": 0,
                "window": 0,
            }
            for item in items
        }

    def _update_item(self, item: str, status: str, details: str, **kwargs: Any) -> None:
        data = self.items[item]
        data["status"] = status
        data["details"] = details
        data["icon"] = self.get_icon(status)
        for key in ("passed", "failed", "skipped", "window"):
            if key in kwargs:
                data[key] = kwargs[key]

    def get_table(self) -> Table:
        table = Table(title=self.table_title, expand=True)
        table.add_column("Property", style="cyan", no_wrap=True)
        table.add_column("Anchor", style="white")
        table.add_column("Status", style="magenta")
        table.add_column("Passed", justify="right")
        table.add_column("Failed", justify="right")
        table.add_column("Skipped", justify="right")
        table.add_column("Window", justify="right")
        table.add_column("Details", style="white")

        for item, data in self.items.items():
            style = STATUS_STYLES.get(data["status"], "white")
            table.add_row(
                f"{data['icon']} {item}",
                self.anchors.get(item, ""),
                f"[{style}]{data['status'].upper()}[/{style}]",
                str(data["passed"]),
                f"[red]{data['failed']}[/red]" if data["failed"] else "0",
                str(data["skipped"]),
                f"[yellow]{data['window']}[/yellow]" if data["window"] else "0",
                data["details"],
            )

        return table


class Prop4Tracker(BaseTracker):
    """One row per star-factorization instance with its beta."""

    @property
    def table_title(self) -> str:
        return "Star factorization of E_i(m)"

    def _initialize_items(self, items: List[str]) -> Dict[str, Dict[str, Any]]:
        return {
            item: {"status": "pending", "icon": self.get_icon("pending"), "beta": "-", "details": ""}
            for item in items
        }

    def _update_item(self, item: str, status: str, details: str, **kwargs: Any) -> None:
        data = self.items[item]
        data["status"] = status
        data["icon"] = self.get_icon(status)
        data["details"] = details
        if kwargs.get("beta") is not None:
            data["beta"] = str(kwargs["beta"])

    def get_table(self) -> Table:
        table = Table(title=self.table_title, expand=True)
        table.add_column("Instance", style="cyan", no_wrap=True)
        table.add_column("beta", justify="right", style="magenta")
        table.add_column("Status")
        table.add_column("Details", style="white")

        for item, data in self.items.items():
            style = STATUS_STYLES.get(data["status"], "white")
            table.add_row(
                f"{data['icon']} {item}",
                data["beta"],
                f"[{style}]{data['status'].upper()}[/{style}]",
                data["details"],
            )

        return table


__all__ = ["BaseTracker", "Prop4Tracker", "PropertyTracker", "STATUS_ICONS"]
