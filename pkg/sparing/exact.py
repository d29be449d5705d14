"""Exact sparing number: the minimum of |E(G − I)| over independent sets I.

Adding a vertex to an independent set never increases |E(G − I)|, so the
minimum is attained at a maximal independent set. ``enumerate_maximal``
walks the maximal independent sets as the maximal cliques of the complement;
``brute_subsets`` filters every vertex subset down to the same family and
serves as the reference. Ties go to the lexicographically smallest sorted
vertex set, so both methods return the same optimum.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum

import networkx as nx

from .errors import BudgetExceededError, LabelingError, PreconditionError
from .graph import Graph
from .greedy import run_greedy
from .result import Method, SparingResult

logger = logging.getLogger(__name__)


class ExactMethod(str, Enum):
    ENUMERATE_MAXIMAL = "enumerate_maximal"
    BRUTE_SUBSETS = "brute_subsets"


@dataclass(frozen=True)
class ExactConfig:
    method: ExactMethod = ExactMethod.ENUMERATE_MAXIMAL
    vertex_limit_brute: int = 20
    # seconds; None means unlimited
    time_budget: float | None = None


def enumerate_maximal_independent_sets(g: Graph) -> Iterator[frozenset[int]]:
    if g.n == 0:
        yield frozenset()
        return
    for clique in nx.find_cliques(nx.complement(g.to_networkx())):
        yield frozenset(clique)


def independent_subsets(g: Graph) -> Iterator[frozenset[int]]:
    """Every independent vertex subset, in bitmask order."""
    masks = g.neighbor_masks
    for subset in range(1 << g.n):
        members = [v for v in g.vertices if subset >> v & 1]
        if all(not masks[v] & subset for v in members):
            yield frozenset(members)


def maximal_independent_subsets(g: Graph) -> Iterator[frozenset[int]]:
    """Independent subsets that no outside vertex can extend."""
    masks = g.neighbor_masks
    for members in independent_subsets(g):
        bits = sum(1 << v for v in members)
        if all(v in members or masks[v] & bits for v in g.vertices):
            yield members


def max_incidence(g: Graph, i: Iterable[int]) -> int:
    """Number of edges with at least one endpoint in the independent set ``i``."""
    vs = frozenset(i)
    if not g.is_independent(vs):
        raise PreconditionError(f"vertex set {sorted(vs)} is not independent")
    return g.edge_count - len(g.edges_within(frozenset(g.vertices) - vs))


def sparing_exact(g: Graph, cfg: ExactConfig | None = None) -> SparingResult:
    """Return an independent set minimizing |E(G − I)| with ``phi`` that minimum.

    Raises:
        PreconditionError: ``brute_subsets`` on a graph above the vertex limit.
        BudgetExceededError: the time budget ran out; ``best`` holds an upper bound.
    """
    cfg = cfg or ExactConfig()
    if cfg.method is ExactMethod.BRUTE_SUBSETS:
        if g.n > cfg.vertex_limit_brute:
            raise PreconditionError(
                f"brute_subsets is limited to {cfg.vertex_limit_brute} vertices, graph has {g.n}"
            )
        candidates = maximal_independent_subsets(g)
        method = Method.BRUTE
    else:
        candidates = enumerate_maximal_independent_sets(g)
        method = Method.EXACT

    start = time.perf_counter()
    budget = cfg.time_budget
    degrees = g.degree_sequence()
    best_key: tuple[int, tuple[int, ...]] | None = None
    examined = 0

    for candidate in candidates:
        if budget is not None and time.perf_counter() - start >= budget:
            raise _budget_exceeded(g, best_key, method, budget, examined)
        examined += 1
        # I is independent, so every edge meets I at most once.
        key = (g.edge_count - sum(degrees[v] for v in candidate), tuple(sorted(candidate)))
        if best_key is None or key < best_key:
            best_key = key

    assert best_key is not None
    result = SparingResult.for_independent_set(
        g, frozenset(best_key[1]), method, proven_optimal=True
    )
    logger.info(
        "%s: n=%d m=%d phi=%d after %d candidate(s) in %.1f ms",
        method,
        g.n,
        g.edge_count,
        result.phi,
        examined,
        (time.perf_counter() - start) * 1000.0,
    )
    return result


def _budget_exceeded(
    g: Graph,
    best_key: tuple[int, tuple[int, ...]] | None,
    method: Method,
    budget: float,
    examined: int,
) -> BudgetExceededError:
    if best_key is None:
        best = SparingResult.for_independent_set(
            g, run_greedy(g).independent_set, method, proven_optimal=False
        )
    else:
        best = SparingResult.for_independent_set(
            g, frozenset(best_key[1]), method, proven_optimal=False
        )
    logger.warning(
        "%s: budget of %gs exhausted after %d candidate(s); phi <= %d",
        method,
        budget,
        examined,
        best.phi,
    )
    return BudgetExceededError(best, budget)


def sparing_brute_labelings(
    g: Graph, ground_set_size: int | None = None, vertex_limit: int = 10
) -> int:
    """Sparing number straight from the weak-labeling characterization.

    Tries every split of the vertices into singleton and non-singleton roles
    such that each edge keeps a singleton endpoint and the ground set of
    ``ground_set_size`` elements (default ``2n``) can supply distinct labels
    for both roles; returns the fewest edges with two singleton endpoints.
    """
    if g.n > vertex_limit:
        raise LabelingError(f"role enumeration is limited to {vertex_limit} vertices, got {g.n}")
    size = 2 * g.n if ground_set_size is None else ground_set_size
    if size < 0:
        raise LabelingError(f"ground set size must be non-negative, got {size}")
    non_singleton_capacity = 2**size - size - 1
    edges = sorted(g.edges)

    best: int | None = None
    for roles in range(1 << g.n):
        k = roles.bit_count()
        if g.n - k > size or k > non_singleton_capacity:
            continue
        if any(roles >> u & 1 and roles >> v & 1 for u, v in edges):
            continue
        mono = sum(1 for u, v in edges if not roles >> u & 1 and not roles >> v & 1)
        if best is None or mono < best:
            best = mono
    if best is None:
        raise LabelingError(f"a ground set of {size} element(s) cannot label {g.n} vertices")
    return best
