"""Greedy-versus-exact comparison over seeded batches of graphs."""

from __future__ import annotations

import csv
import logging
import random as _random
import time
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import TextIO

from . import generators
from .errors import GeneratorSpecError, InvariantError
from .exact import ExactConfig, sparing_exact
from .graph import Graph
from .greedy import run_greedy
from .result import SparingResult

logger = logging.getLogger(__name__)

CSV_HEADER = (
    "id",
    "n",
    "m",
    "phi_greedy",
    "phi_literal",
    "phi_exact",
    "gap",
    "greedy_optimal",
    "t_greedy_ms",
    "t_exact_ms",
)
BATCH_FAMILIES = ("random", "bipartite", "tree")


@dataclass(frozen=True)
class CompareRow:
    instance_id: int
    n: int
    m: int
    phi_greedy: int
    phi_literal: int
    phi_exact: int
    t_greedy_ms: float | None = None
    t_exact_ms: float | None = None

    @property
    def gap(self) -> int:
        return self.phi_greedy - self.phi_exact

    @property
    def greedy_optimal(self) -> bool:
        return self.gap == 0

    def csv_fields(self) -> list[str]:
        def ms(t: float | None) -> str:
            return "" if t is None else f"{t:.3f}"

        return [
            str(self.instance_id),
            str(self.n),
            str(self.m),
            str(self.phi_greedy),
            str(self.phi_literal),
            str(self.phi_exact),
            str(self.gap),
            str(self.greedy_optimal).lower(),
            ms(self.t_greedy_ms),
            ms(self.t_exact_ms),
        ]

    def text_line(self) -> str:
        """CSV columns as key=value pairs; empty timing columns are left out."""
        return " ".join(
            f"{key}={value}" for key, value in zip(CSV_HEADER, self.csv_fields()) if value
        )


@dataclass(frozen=True)
class BatchConfig:
    count: int = 20
    n_min: int = 4
    n_max: int = 10
    p_min: float = 0.2
    p_max: float = 0.6
    family: str = "random"
    seed: int = 0

    def __post_init__(self) -> None:
        if self.count < 0:
            raise GeneratorSpecError(f"batch count must be non-negative, got {self.count}")
        if not 1 <= self.n_min <= self.n_max:
            raise GeneratorSpecError(f"need 1 <= n_min <= n_max, got {self.n_min}, {self.n_max}")
        if not 0.0 <= self.p_min <= self.p_max <= 1.0:
            raise GeneratorSpecError(
                f"need 0 <= p_min <= p_max <= 1, got {self.p_min}, {self.p_max}"
            )
        if self.family not in BATCH_FAMILIES:
            raise GeneratorSpecError(
                f"unknown batch family {self.family!r}; choose from {', '.join(BATCH_FAMILIES)}"
            )


def batch_instances(cfg: BatchConfig) -> list[Graph]:
    """Seeded instances; the same config always yields the same graphs."""
    rng = _random.Random(cfg.seed)
    graphs: list[Graph] = []
    for _ in range(cfg.count):
        n = rng.randint(cfg.n_min, cfg.n_max)
        p = rng.uniform(cfg.p_min, cfg.p_max)
        graph_seed = rng.randrange(2**31)
        if cfg.family == "tree":
            graphs.append(generators.random_tree(n, graph_seed))
        elif cfg.family == "bipartite" and n >= 2:
            left = n // 2
            graphs.append(generators.random_bipartite(left, n - left, p, graph_seed))
        else:
            graphs.append(generators.random(n, p, graph_seed))
    return graphs


def build_row(
    instance_id: int,
    g: Graph,
    greedy: SparingResult,
    exact: SparingResult,
    t_greedy_ms: float | None = None,
    t_exact_ms: float | None = None,
) -> CompareRow:
    """Row for already-solved results.

    Raises:
        InvariantError: greedy beat the exact optimum.
    """
    if greedy.phi < exact.phi:
        raise InvariantError(
            f"instance {instance_id}: greedy phi {greedy.phi} below exact phi {exact.phi}"
        )
    assert greedy.phi_literal is not None
    return CompareRow(
        instance_id=instance_id,
        n=g.n,
        m=g.edge_count,
        phi_greedy=greedy.phi,
        phi_literal=greedy.phi_literal,
        phi_exact=exact.phi,
        t_greedy_ms=t_greedy_ms,
        t_exact_ms=t_exact_ms,
    )


def compare_instance(
    instance_id: int, g: Graph, exact_cfg: ExactConfig | None = None, timing: bool = True
) -> CompareRow:
    t0 = time.perf_counter()
    greedy = run_greedy(g)
    t1 = time.perf_counter()
    exact = sparing_exact(g, exact_cfg)
    t2 = time.perf_counter()
    return build_row(
        instance_id,
        g,
        greedy,
        exact,
        t_greedy_ms=(t1 - t0) * 1000.0 if timing else None,
        t_exact_ms=(t2 - t1) * 1000.0 if timing else None,
    )


def run_compare(
    graphs: Sequence[Graph],
    exact_cfg: ExactConfig | None = None,
    timing: bool = True,
    jobs: int = 1,
) -> list[CompareRow]:
    """Compare every graph; rows come back ordered by instance id for any ``jobs``."""
    if jobs <= 1:
        rows = [compare_instance(i, g, exact_cfg, timing) for i, g in enumerate(graphs)]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(compare_instance, i, g, exact_cfg, timing)
                for i, g in enumerate(graphs)
            ]
            rows = [future.result() for future in futures]
    logger.info("compared %d instance(s)", len(rows))
    return rows


def write_csv(rows: Sequence[CompareRow], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())


@dataclass(frozen=True)
class CompareSummary:
    instances: int
    mean_gap: float
    max_gap: int
    optimal_fraction: float

    @classmethod
    def of(cls, rows: Sequence[CompareRow]) -> CompareSummary:
        if not rows:
            return cls(0, 0.0, 0, 0.0)
        gaps = [row.gap for row in rows]
        return cls(
            instances=len(rows),
            mean_gap=sum(gaps) / len(gaps),
            max_gap=max(gaps),
            optimal_fraction=sum(row.greedy_optimal for row in rows) / len(rows),
        )

    def line(self) -> str:
        return (
            f"instances={self.instances} mean_gap={self.mean_gap:.3f} "
            f"max_gap={self.max_gap} greedy_optimal={self.optimal_fraction:.3f}"
        )
