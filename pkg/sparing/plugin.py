"""pytest plugin exposing sparing-number oracles to test suites.

Registers CLI options and the ``sparing_seed``, ``figure1_graph`` and
``sparing_oracle`` fixtures. With ``--sparing-audit`` every comparison made
through the oracle is rendered in the terminal summary (trylast, so it
follows the other plugins' reports).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import pytest

from sparing import __version__

from .compare import CompareRow, build_row
from .exact import sparing_exact
from .generators import figure1
from .graph import Graph
from .greedy import run_greedy
from .wiasl import build_labeling, verify_wiasl

if TYPE_CHECKING:
    from _pytest.config import Config
    from _pytest.config.argparsing import Parser
    from _pytest.fixtures import FixtureRequest
    from _pytest.terminal import TerminalReporter


@dataclass
class AuditLog:
    rows: list[CompareRow] = field(default_factory=list)
    names: dict[int, str] = field(default_factory=dict)


class SparingOracle:
    """Checks a graph against the exact solver and records the comparison."""

    def __init__(self, log: AuditLog) -> None:
        self.log = log

    def check(self, g: Graph, name: str = "") -> CompareRow:
        """Compare greedy with exact on ``g`` and verify the optimal labeling.

        Raises:
            AssertionError: the labeling built from the exact optimum fails
                verification or does not realize the exact sparing number.
        """
        instance_id = len(self.log.rows)
        exact = sparing_exact(g)
        row = build_row(instance_id, g, run_greedy(g), exact)
        report = verify_wiasl(g, build_labeling(g, exact.independent_set))
        if not report.passed:
            raise AssertionError("; ".join(report.problems()))
        if report.mono_indexed_edge_count != exact.phi:
            raise AssertionError(
                f"labeling has {report.mono_indexed_edge_count} mono-indexed edges, "
                f"expected {exact.phi}"
            )
        self.log.rows.append(row)
        self.log.names[instance_id] = name or f"graph n={g.n} m={g.edge_count}"
        return row


def pytest_addoption(parser: Parser) -> None:
    group = parser.getgroup("sparing", f"sparing-number oracles v{__version__}")
    group.addoption(
        "--sparing-audit",
        action="store_true",
        default=False,
        help="Report every sparing_oracle comparison in the terminal summary",
    )
    group.addoption(
        "--sparing-seed",
        action="store",
        default=0,
        type=int,
        help="Seed exposed through the sparing_seed fixture (default: 0)",
    )
    group.addoption(
        "--sparing-top-n",
        action="store",
        default=20,
        type=int,
        help="Number of comparisons to show in the audit table (default: 20)",
    )


def pytest_configure(config: Config) -> None:
    setattr(config, "_sparing_audit", AuditLog())
    if not config.getoption("--sparing-audit"):
        return
    setattr(config, "_sparing_audit_enabled", True)


def pytest_report_header(config: Config) -> str:
    return f"sparing-number {__version__}: sparing-seed={config.getoption('--sparing-seed')}"


@pytest.fixture
def sparing_seed(request: FixtureRequest) -> int:
    return int(request.config.getoption("--sparing-seed"))


@pytest.fixture
def figure1_graph() -> Graph:
    return figure1()


@pytest.fixture
def sparing_oracle(request: FixtureRequest) -> SparingOracle:
    log = getattr(request.config, "_sparing_audit", None)
    if log is None:
        log = AuditLog()
        setattr(request.config, "_sparing_audit", log)
    return SparingOracle(log)


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(
    terminalreporter: TerminalReporter, exitstatus: int, config: Config
) -> None:
    if not getattr(config, "_sparing_audit_enabled", False):
        return

    tr = terminalreporter
    log: AuditLog | None = getattr(config, "_sparing_audit", None)
    if log is None or not log.rows:
        tr.write_line("")
        tr.write_sep("-", "sparing: no oracle comparisons recorded")
        return

    try:
        from .reporter import SparingReporter

        reporter = SparingReporter(stderr=False)
        top_n = config.getoption("--sparing-top-n")

        tr.write_line("")
        reporter.render_compare_table(log.rows, top_n=top_n, names=log.names)
        reporter.render_gap_distribution(log.rows)
        reporter.render_summary(log.rows)
    except Exception as e:
        tr.write_line("")
        tr.write_sep("-", f"sparing: failed to render audit report: {e}")
        if config.option.verbose > 0:
            import traceback

            tr.write_line(traceback.format_exc())
