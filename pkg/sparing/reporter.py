"""Terminal reporter using rich for greedy-versus-exact comparisons."""

from __future__ import annotations

import shutil
from collections.abc import Iterable
from dataclasses import dataclass

from rich.console import Console
from rich.table import Table

from .compare import CompareRow, CompareSummary


@dataclass
class GapBucket:
    gap: int
    count: int
    fraction: float


class SparingReporter:
    """Render comparison rows, the gap distribution and a summary line."""

    def __init__(
        self, console: Console | None = None, name_width: int = 40, stderr: bool = True
    ) -> None:
        if console is None:
            # Terminal width, clamped to a readable range
            width = max(80, min(shutil.get_terminal_size().columns, 200))
            console = Console(width=width, stderr=stderr)
        self.console = console
        self.name_width = name_width

    def _color_for_gap(self, gap: int) -> str:
        if gap > 1:
            return "red"
        if gap == 1:
            return "yellow"
        return "green"

    def _truncate_middle(self, text: str, max_length: int) -> str:
        """Shorten ``text`` to ``max_length`` with '...' in the middle."""
        if len(text) <= max_length:
            return text
        if max_length <= 3:
            return text[:max_length]
        available = max_length - 3
        left_size = (available + 1) // 2
        right_size = available - left_size
        return f"{text[:left_size]}...{text[-right_size:]}"

    def render_compare_table(
        self,
        rows: Iterable[CompareRow],
        top_n: int = 20,
        names: dict[int, str] | None = None,
    ) -> None:
        """Rows ordered by gap (largest first, then id); ``top_n=0`` shows all."""
        table = Table(title="Greedy vs exact sparing number", expand=True)
        table.add_column("Gap", justify="right", no_wrap=True)
        table.add_column("phi greedy", justify="right", no_wrap=True)
        table.add_column("phi literal", justify="right", no_wrap=True)
        table.add_column("phi exact", justify="right", no_wrap=True)
        table.add_column("n", justify="right", no_wrap=True)
        table.add_column("m", justify="right", no_wrap=True)
        table.add_column("Instance")

        ordered = sorted(rows, key=lambda r: (-r.gap, r.instance_id))
        if top_n:
            ordered = ordered[:top_n]

        for row in ordered:
            color = self._color_for_gap(row.gap)
            name = (names or {}).get(row.instance_id, str(row.instance_id))
            table.add_row(
                f"[{color}]{row.gap}[/{color}]",
                str(row.phi_greedy),
                str(row.phi_literal),
                str(row.phi_exact),
                str(row.n),
                str(row.m),
                self._truncate_middle(name, self.name_width),
            )

        self.console.print(table)

    def render_gap_distribution(self, rows: Iterable[CompareRow]) -> None:
        by_gap: dict[int, int] = {}
        total = 0
        for row in rows:
            by_gap[row.gap] = by_gap.get(row.gap, 0) + 1
            total += 1

        buckets = [
            GapBucket(gap=gap, count=count, fraction=count / total)
            for gap, count in sorted(by_gap.items())
        ]

        table = Table(title="Gap distribution", expand=True)
        table.add_column("Gap", justify="right", no_wrap=True)
        table.add_column("Instances", justify="right", no_wrap=True)
        table.add_column("Share", justify="right", no_wrap=True)

        for bucket in buckets:
            color = self._color_for_gap(bucket.gap)
            table.add_row(
                f"[{color}]{bucket.gap}[/{color}]",
                str(bucket.count),
                f"{bucket.fraction * 100.0:.1f}%",
            )

        self.console.print(table)

    def render_summary(self, rows: Iterable[CompareRow]) -> None:
        summary = CompareSummary.of(list(rows))
        self.console.print(f"summary {summary.line()}", markup=False, highlight=False)
