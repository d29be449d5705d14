"""Command-line front end: ``sparing {sparing,label,trace,gen,compare}``.

Exit codes: 0 success, 2 input error, 3 budget exhausted (upper bound only),
4 labeling verification failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler

from . import __version__
from .compare import BATCH_FAMILIES, BatchConfig, batch_instances, run_compare, write_csv
from .edgelist import read_edge_list, serialize_edge_list, to_dot
from .errors import BudgetExceededError, GraphError, PreconditionError
from .exact import ExactConfig, ExactMethod, sparing_exact
from .generators import generate
from .graph import Graph
from .greedy import format_trace, replay_trace, run_greedy
from .reporter import SparingReporter
from .result import Method, SparingResult, format_edges, format_vertices
from .wiasl import build_labeling, format_labeling, verify_wiasl

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4


@dataclass(frozen=True)
class RunConfig:
    command: str
    gen: str | None = None
    input: Path | None = None
    method: Method = Method.GREEDY
    seed: int = 0
    budget: float | None = None
    output_format: str = "text"
    dot: Path | None = None
    csv: Path | None = None
    picks: tuple[int, ...] | None = None
    timing: bool = True
    batch: BatchConfig | None = None
    jobs: int = 1
    top_n: int = 20
    verbosity: int = 0

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> RunConfig:
        batch = None
        if ns.command == "compare" and ns.gen is None and ns.input is None:
            batch = BatchConfig(
                count=ns.count,
                n_min=ns.n_min,
                n_max=ns.n_max,
                p_min=ns.p_min,
                p_max=ns.p_max,
                family=ns.family,
                seed=ns.seed,
            )
        picks = getattr(ns, "picks", None)
        return cls(
            command=ns.command,
            gen=ns.gen,
            input=ns.input,
            method=Method(getattr(ns, "method", Method.GREEDY.value)),
            seed=ns.seed,
            budget=getattr(ns, "budget", None),
            output_format=getattr(ns, "format", "text"),
            dot=getattr(ns, "dot", None),
            csv=getattr(ns, "csv", None),
            picks=None if picks is None else tuple(picks),
            timing=not getattr(ns, "no_timing", False),
            batch=batch,
            jobs=getattr(ns, "jobs", 1),
            top_n=getattr(ns, "top_n", 20),
            verbosity=ns.verbose,
        )

    def exact_config(self) -> ExactConfig:
        if self.method is Method.BRUTE:
            return ExactConfig(method=ExactMethod.BRUTE_SUBSETS, time_budget=self.budget)
        return ExactConfig(method=ExactMethod.ENUMERATE_MAXIMAL, time_budget=self.budget)


def _pick_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid pick list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument("--gen", metavar="SPEC", help="generator spec, e.g. cycle:5 or figure1")
    source.add_argument("--in", dest="input", type=Path, metavar="PATH", help="edge-list file")
    common.add_argument("--seed", type=int, default=0, help="seed for random generators")
    common.add_argument("-v", "--verbose", action="count", default=0, help="more logging")

    methods = [m.value for m in Method]
    parser = argparse.ArgumentParser(
        prog="sparing",
        description="Sparing numbers and weak integer additive set-labelings of graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sparing", parents=[common], help="compute the sparing number")
    p.add_argument("--method", choices=methods, default="greedy")
    p.add_argument("--budget", type=float, metavar="SEC", help="time budget for exact methods")
    p.add_argument("--format", choices=("text", "dot"), default="text")
    p.add_argument("--dot", type=Path, metavar="PATH", help="also write annotated DOT here")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed times")

    p = sub.add_parser("label", parents=[common], help="print a verified WIASL")
    p.add_argument("--method", choices=methods, default="exact")
    p.add_argument("--budget", type=float, metavar="SEC")
    p.add_argument("--format", choices=("text", "dot"), default="text")
    p.add_argument("--dot", type=Path, metavar="PATH")

    p = sub.add_parser("trace", parents=[common], help="print the greedy iterations")
    p.add_argument("--picks", type=_pick_list, metavar="V1,V2,...", help="forced pick order")

    p = sub.add_parser("gen", parents=[common], help="print a generated graph")
    p.add_argument("--format", choices=("text", "dot"), default="text")

    p = sub.add_parser("compare", parents=[common], help="greedy vs exact over a batch")
    p.add_argument("--method", choices=("exact", "brute"), default="exact")
    p.add_argument("--budget", type=float, metavar="SEC")
    p.add_argument("--csv", type=Path, metavar="PATH", help="write CSV here instead of stdout")
    p.add_argument(
        "--format", choices=("csv", "text"), default="csv", help="stdout rows as CSV or key=value"
    )
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--p-min", type=float, default=0.2)
    p.add_argument("--p-max", type=float, default=0.6)
    p.add_argument("--family", choices=BATCH_FAMILIES, default="random")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--top-n", type=int, default=20, help="rows in the summary table (0 = all)")
    p.add_argument("--no-timing", action="store_true", help="leave timing columns empty")
    return parser


def configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(max(verbosity, 0), logging.DEBUG)
    root = logging.getLogger("sparing")
    for handler in [h for h in root.handlers if isinstance(h, RichHandler)]:
        root.removeHandler(handler)
    root.addHandler(RichHandler(console=Console(stderr=True), show_time=False, show_path=False))
    root.setLevel(level)


def load_graph(cfg: RunConfig) -> Graph:
    if cfg.input is not None:
        return read_edge_list(cfg.input)
    if cfg.gen is not None:
        return generate(cfg.gen, seed=cfg.seed)
    raise GraphError("no input graph: pass --gen SPEC or --in PATH")


def solve(g: Graph, cfg: RunConfig) -> SparingResult:
    if cfg.method is Method.GREEDY:
        return run_greedy(g)
    return sparing_exact(g, cfg.exact_config())


def _elapsed(cfg: RunConfig, start: float) -> str:
    return f"{(time.perf_counter() - start) * 1000.0:.3f}" if cfg.timing else "-"


def _result_line(result: SparingResult, elapsed: str) -> str:
    line = (
        f"phi={result.phi} I={format_vertices(result.independent_set)} "
        f"method={result.method} elapsed={elapsed}"
    )
    if result.method is Method.GREEDY:
        missed = format_edges(result.discrepancy) if result.discrepancy else "none"
        return f"{line} phi_literal={result.phi_literal} discrepancy={missed}"
    return f"{line} optimal={str(result.proven_optimal).lower()}"


def _write_dot(g: Graph, result: SparingResult, path: Path) -> None:
    path.write_text(to_dot(g, result.independent_set, result.mono_edges))


def cmd_sparing(cfg: RunConfig) -> int:
    g = load_graph(cfg)
    start = time.perf_counter()
    try:
        result = solve(g, cfg)
    except BudgetExceededError as exc:
        print(_result_line(exc.best, _elapsed(cfg, start)))
        return EXIT_BUDGET
    if cfg.output_format == "dot":
        sys.stdout.write(to_dot(g, result.independent_set, result.mono_edges))
    else:
        print(_result_line(result, _elapsed(cfg, start)))
    if cfg.dot is not None:
        _write_dot(g, result, cfg.dot)
    return EXIT_OK


def cmd_label(cfg: RunConfig) -> int:
    g = load_graph(cfg)
    bounded = False
    try:
        result = solve(g, cfg)
    except BudgetExceededError as exc:
        logger.warning("labeling the best-so-far independent set (not proven optimal)")
        result = exc.best
        bounded = True
    labeling = build_labeling(g, result.independent_set)
    report = verify_wiasl(g, labeling)
    if cfg.output_format == "dot":
        sys.stdout.write(to_dot(g, result.independent_set, result.mono_edges))
    else:
        for line in format_labeling(g, labeling):
            print(line)
    if cfg.dot is not None:
        _write_dot(g, result, cfg.dot)
    if not report.passed:
        for problem in report.problems():
            print(f"verification: {problem}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_BUDGET if bounded else EXIT_OK


def cmd_trace(cfg: RunConfig) -> int:
    g = load_graph(cfg)
    result = run_greedy(g) if cfg.picks is None else replay_trace(g, cfg.picks)
    for line in format_trace(result):
        print(line)
    return EXIT_OK


def cmd_gen(cfg: RunConfig) -> int:
    g = load_graph(cfg)
    sys.stdout.write(to_dot(g) if cfg.output_format == "dot" else serialize_edge_list(g))
    return EXIT_OK


def cmd_compare(cfg: RunConfig) -> int:
    if cfg.batch is not None:
        graphs = batch_instances(cfg.batch)
    else:
        graphs = [load_graph(cfg)]
    try:
        rows = run_compare(graphs, cfg.exact_config(), timing=cfg.timing, jobs=cfg.jobs)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET

    if cfg.csv is not None:
        with cfg.csv.open("w", newline="") as f:
            write_csv(rows, f)
    elif cfg.output_format == "csv":
        write_csv(rows, sys.stdout)
    if cfg.output_format == "text":
        for row in rows:
            print(row.text_line())

    reporter = SparingReporter()
    reporter.render_compare_table(rows, top_n=cfg.top_n)
    reporter.render_gap_distribution(rows)
    reporter.render_summary(rows)
    return EXIT_OK


_DISPATCH = {
    "sparing": cmd_sparing,
    "label": cmd_label,
    "trace": cmd_trace,
    "gen": cmd_gen,
    "compare": cmd_compare,
}


def main(argv: Sequence[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    configure_logging(ns.verbose)
    try:
        cfg = RunConfig.from_args(ns)
        return _DISPATCH[cfg.command](cfg)
    except (GraphError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
