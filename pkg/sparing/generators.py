"""Graph families and inline generator specs such as ``cycle:5`` or ``random:20,0.3,7``."""

from __future__ import annotations

import random as _random
from collections.abc import Callable

import networkx as nx

from .errors import GeneratorSpecError
from .graph import Edge, Graph

# The 14-vertex example graph, a_k stored as vertex k-1. Stars of the five
# greedy picks plus the edges found inside their neighborhoods.
FIGURE1_STARS: dict[int, tuple[int, ...]] = {
    3: (2, 4, 5, 6, 11),
    12: (2, 6, 9, 11, 13),
    7: (1, 2, 8, 11),
    10: (8, 9, 11),
    14: (4, 5, 13),
}
FIGURE1_EXTRA: tuple[tuple[int, int], ...] = ((4, 5), (5, 6), (1, 2), (1, 8), (8, 9), (5, 13))


def a(k: int) -> int:
    """Vertex id of ``a_k`` in the figure1 graph."""
    if not 1 <= k <= 14:
        raise GeneratorSpecError(f"a_{k} is not a figure1 vertex")
    return k - 1


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise GeneratorSpecError(message)


def figure1() -> Graph:
    pairs: list[Edge] = [(a(c), a(u)) for c, leaves in FIGURE1_STARS.items() for u in leaves]
    pairs.extend((a(u), a(v)) for u, v in FIGURE1_EXTRA)
    return Graph.from_edges(14, pairs)


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_networkx(nx.path_graph(n))


def cycle(n: int) -> Graph:
    _require(n >= 3, f"a simple cycle needs n >= 3, got {n}")
    return Graph.from_networkx(nx.cycle_graph(n))


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph.from_networkx(nx.complete_graph(n))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: vertices ``0..m-1`` on one side, ``m..m+n-1`` on the other."""
    _require(m >= 1 and n >= 1, f"complete bipartite needs m, n >= 1, got {m}, {n}")
    return Graph.from_networkx(nx.complete_bipartite_graph(m, n))


def star(k: int) -> Graph:
    """K_{1,k} with center 0."""
    _require(k >= 1, f"star needs k >= 1, got {k}")
    return Graph.from_networkx(nx.star_graph(k))


def _check_p(p: float) -> None:
    _require(0.0 <= p <= 1.0, f"edge probability must lie in [0, 1], got {p}")


def random(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p), deterministic for a fixed seed."""
    _require(n >= 1, f"random graph needs n >= 1, got {n}")
    _check_p(p)
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def random_bipartite(m: int, n: int, p: float, seed: int) -> Graph:
    _require(m >= 1 and n >= 1, f"random bipartite needs m, n >= 1, got {m}, {n}")
    _check_p(p)
    return Graph.from_networkx(nx.bipartite.random_graph(m, n, p, seed=seed))


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree on ``n`` vertices, drawn through a Prüfer sequence."""
    _require(n >= 1, f"tree needs n >= 1, got {n}")
    if n <= 2:
        return path(n)
    rng = _random.Random(seed)
    return Graph.from_networkx(nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)]))


def _ints(args: list[str], count: int, family: str) -> list[int]:
    try:
        return [int(x) for x in args[:count]]
    except ValueError as exc:
        raise GeneratorSpecError(f"{family}: expected integer parameters, got {args}") from exc


def _with_seed(args: list[str], fixed: int, seed: int, family: str) -> tuple[list[str], int]:
    if len(args) == fixed:
        return args, seed
    if len(args) == fixed + 1:
        return args[:fixed], _ints(args[fixed:], 1, family)[0]
    raise GeneratorSpecError(
        f"{family}: expected {fixed} or {fixed + 1} parameters, got {len(args)}"
    )


def _prob(text: str, family: str) -> float:
    try:
        return float(text)
    except ValueError as exc:
        raise GeneratorSpecError(f"{family}: invalid probability {text!r}") from exc


def _exact(args: list[str], count: int, family: str) -> list[int]:
    if len(args) != count:
        raise GeneratorSpecError(f"{family}: expected {count} parameters, got {len(args)}")
    return _ints(args, count, family)


def _build_random(args: list[str], seed: int) -> Graph:
    args, seed = _with_seed(args, 2, seed, "random")
    return random(_ints(args, 1, "random")[0], _prob(args[1], "random"), seed)


def _build_random_bipartite(args: list[str], seed: int) -> Graph:
    args, seed = _with_seed(args, 3, seed, "random_bipartite")
    m, n = _ints(args, 2, "random_bipartite")
    return random_bipartite(m, n, _prob(args[2], "random_bipartite"), seed)


def _build_tree(args: list[str], seed: int) -> Graph:
    args, seed = _with_seed(args, 1, seed, "tree")
    return random_tree(_ints(args, 1, "tree")[0], seed)


def _build_figure1(args: list[str], seed: int) -> Graph:
    _exact(args, 0, "figure1")
    return figure1()


_FAMILIES: dict[str, Callable[[list[str], int], Graph]] = {
    "figure1": _build_figure1,
    "path": lambda args, seed: path(*_exact(args, 1, "path")),
    "cycle": lambda args, seed: cycle(*_exact(args, 1, "cycle")),
    "complete": lambda args, seed: complete(*_exact(args, 1, "complete")),
    "complete_bipartite": lambda args, seed: complete_bipartite(
        *_exact(args, 2, "complete_bipartite")
    ),
    "star": lambda args, seed: star(*_exact(args, 1, "star")),
    "random": _build_random,
    "random_bipartite": _build_random_bipartite,
    "tree": _build_tree,
}

FAMILIES = tuple(_FAMILIES)


def generate(spec: str, seed: int = 0) -> Graph:
    """Build a graph from an inline spec ``family[:p1,p2,...]``.

    Random families take an optional trailing seed parameter; ``seed`` is used
    when it is omitted.
    """
    family, _, rest = spec.strip().partition(":")
    builder = _FAMILIES.get(family)
    if builder is None:
        choices = ", ".join(FAMILIES)
        raise GeneratorSpecError(f"unknown graph family {family!r}; choose from {choices}")
    args = [x.strip() for x in rest.split(",")] if rest.strip() else []
    return builder(args, seed)
