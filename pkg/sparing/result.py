"""Result types shared by the greedy and exact solvers."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

from .graph import Edge, EdgeSet, Graph, sorted_edges


class Method(str, Enum):
    GREEDY = "greedy"
    EXACT = "exact"
    BRUTE = "brute"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class IterationRecord:
    """One pass of the greedy loop."""

    picked: int
    degree_at_pick: int
    new_singletons: frozenset[int]
    new_mono_edges: EdgeSet
    cumulative_mono_edges: EdgeSet


@dataclass(frozen=True)
class SparingResult:
    independent_set: frozenset[int]
    phi: int
    mono_edges: EdgeSet
    method: Method
    phi_literal: int | None = None
    trace: tuple[IterationRecord, ...] = ()
    discrepancy: EdgeSet = frozenset()
    proven_optimal: bool = False

    @classmethod
    def for_independent_set(
        cls,
        g: Graph,
        independent_set: frozenset[int],
        method: Method,
        proven_optimal: bool,
    ) -> SparingResult:
        """Score ``independent_set`` by |E(G − I)|."""
        mono = g.edges_within(frozenset(g.vertices) - independent_set)
        return cls(
            independent_set=independent_set,
            phi=len(mono),
            mono_edges=mono,
            method=method,
            proven_optimal=proven_optimal,
        )

    @property
    def has_discrepancy(self) -> bool:
        return bool(self.discrepancy)

    def sorted_independent_set(self) -> list[int]:
        return sorted(self.independent_set)

    def sorted_mono_edges(self) -> list[Edge]:
        return sorted_edges(self.mono_edges)


def format_vertices(vs: Iterable[int]) -> str:
    return "[" + ",".join(str(v) for v in sorted(vs)) + "]"


def format_edges(es: Iterable[Edge]) -> str:
    return "[" + ",".join(f"{u}-{v}" for u, v in sorted_edges(es)) + "]"
