"""Greedy sparing-number heuristic.

Repeatedly picks an unlabeled vertex of maximum degree into the independent
set, labels its neighbors with singletons and collects the edges lying inside
that neighborhood. The reported ``phi`` is |E(G − I)| for the chosen set;
``phi_literal`` keeps the per-neighborhood count, which can miss mono edges
whose endpoints were labeled by two different picks.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, replace

from .errors import InvalidVertexError, InvariantError, PreconditionError, ReplayError
from .graph import EdgeSet, Graph
from .result import IterationRecord, Method, SparingResult, format_edges, format_vertices

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GreedyState:
    """Chosen vertices, singleton-labeled vertices and the accumulated mono edges."""

    chosen: tuple[int, ...] = ()
    singleton_labeled: frozenset[int] = frozenset()
    mono_edges_literal: EdgeSet = frozenset()
    iteration: int = 0
    trace: tuple[IterationRecord, ...] = ()

    @property
    def labeled(self) -> frozenset[int]:
        return self.singleton_labeled.union(self.chosen)

    def unlabeled(self, g: Graph) -> list[int]:
        labeled = self.labeled
        return [v for v in g.vertices if v not in labeled]


def select_next(g: Graph, state: GreedyState) -> int | None:
    """Unlabeled vertex of maximum degree, smallest id on ties; None when all are labeled."""
    best: int | None = None
    best_degree = -1
    for v in state.unlabeled(g):
        d = g.degree(v)
        if d > best_degree:
            best, best_degree = v, d
    return best


def greedy_step(g: Graph, state: GreedyState, v: int) -> GreedyState:
    degree = g.degree(v)
    if v in state.chosen:
        raise PreconditionError(f"vertex {v} is already in the independent set")
    if v in state.singleton_labeled:
        raise PreconditionError(f"vertex {v} is already singleton-labeled")
    neighbors = g.open_neighborhood(v)
    if neighbors.intersection(state.chosen):
        raise PreconditionError(f"vertex {v} is adjacent to a chosen vertex")

    # Unlabeled vertices never touch chosen ones, so removing the chosen
    # vertices must leave the degree unchanged.
    reduced_degree = g.without(state.chosen).degree(v)
    if reduced_degree != degree:
        raise InvariantError(
            f"vertex {v}: degree {reduced_degree} in the reduced graph, {degree} in G"
        )

    found = g.edges_within(neighbors)
    cumulative = state.mono_edges_literal | found
    record = IterationRecord(
        picked=v,
        degree_at_pick=degree,
        new_singletons=neighbors - state.singleton_labeled,
        new_mono_edges=found - state.mono_edges_literal,
        cumulative_mono_edges=cumulative,
    )
    logger.debug(
        "pick %d (deg %d): singletons %s, mono edges %s",
        v,
        degree,
        format_vertices(record.new_singletons),
        format_edges(record.new_mono_edges),
    )
    return GreedyState(
        chosen=(*state.chosen, v),
        singleton_labeled=state.singleton_labeled | neighbors,
        mono_edges_literal=cumulative,
        iteration=state.iteration + 1,
        trace=(*state.trace, record),
    )


def _finish(g: Graph, state: GreedyState) -> SparingResult:
    base = SparingResult.for_independent_set(
        g, frozenset(state.chosen), Method.GREEDY, proven_optimal=False
    )
    missed = base.mono_edges - state.mono_edges_literal
    if missed:
        logger.warning(
            "neighborhood scan missed %d mono edge(s): %s", len(missed), format_edges(missed)
        )
    logger.info("greedy: n=%d m=%d phi=%d", g.n, g.edge_count, base.phi)
    return replace(
        base,
        phi_literal=len(state.mono_edges_literal),
        trace=state.trace,
        discrepancy=missed,
    )


def run_greedy(g: Graph) -> SparingResult:
    state = GreedyState()
    while (v := select_next(g, state)) is not None:
        state = greedy_step(g, state, v)
    return _finish(g, state)


def replay_trace(g: Graph, picks: Sequence[int]) -> SparingResult:
    """Run the greedy loop with a forced pick order.

    Raises:
        ReplayError: a pick is out of range or already labeled, or vertices
            remain unlabeled after the last pick.
    """
    state = GreedyState()
    for position, v in enumerate(picks):
        try:
            state = greedy_step(g, state, v)
        except (PreconditionError, InvalidVertexError) as exc:
            raise ReplayError(f"pick {v} at position {position}: {exc}", v, position) from exc
    remaining = state.unlabeled(g)
    if remaining:
        raise ReplayError(f"pick list incomplete; unlabeled vertices {format_vertices(remaining)}")
    return _finish(g, state)


def format_trace(result: SparingResult) -> list[str]:
    lines = [
        f"pick={r.picked} deg={r.degree_at_pick} "
        f"new_singletons={format_vertices(r.new_singletons)} "
        f"new_mono_edges={format_edges(r.new_mono_edges)}"
        for r in result.trace
    ]
    lines.append(f"I={format_vertices(result.independent_set)}")
    lines.append(f"phi={result.phi}")
    lines.append(f"phi_literal={result.phi_literal}")
    missed = format_edges(result.discrepancy) if result.discrepancy else "none"
    lines.append(f"discrepancy={missed}")
    return lines
