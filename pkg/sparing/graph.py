"""Simple undirected graphs over dense integer vertex ids."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from .errors import GraphError, InvalidVertexError

Edge = tuple[int, int]
EdgeSet = frozenset[Edge]


def edge(u: int, v: int) -> Edge:
    """Return the canonical form of the unordered pair ``uv`` (smaller id first)."""
    return (u, v) if u <= v else (v, u)


def sorted_edges(edges: Iterable[Edge]) -> list[Edge]:
    return sorted(edge(u, v) for u, v in edges)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0 .. n-1``.

    ``edges`` holds canonical pairs only; use :meth:`from_edges` to build a
    graph from arbitrary pairs. Adjacency is derived lazily and cached.
    """

    n: int
    edges: EdgeSet = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) is not canonical")
            if u < 0 or v >= self.n:
                raise GraphError(f"edge ({u}, {v}) references a vertex outside [0, {self.n})")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, rejecting self-loops and parallel edges."""
        seen: set[Edge] = set()
        for u, v in pairs:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e[0]}-{e[1]}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        """Convert a networkx graph; non-dense node labels are relabeled in sorted order."""
        if g.is_directed() or g.is_multigraph():
            raise GraphError("only simple undirected graphs are supported")
        if set(g.nodes) != set(range(g.number_of_nodes())):
            g = nx.convert_node_labels_to_integers(g, ordering="sorted")
        return cls.from_edges(g.number_of_nodes(), g.edges())

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Open neighborhoods as vertex bitmasks (bit ``v`` set iff ``v`` is a neighbor)."""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adjacency)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertexError(v, self.n)

    def _check_all(self, s: Iterable[int]) -> frozenset[int]:
        vs = frozenset(s)
        for v in vs:
            self._check(v)
        return vs

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adjacency[v])

    def open_neighborhood(self, v: int) -> frozenset[int]:
        """N(v): the vertices adjacent to ``v``."""
        self._check(v)
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        """N[v] = N(v) together with ``v`` itself."""
        return self.open_neighborhood(v) | {v}

    def max_degree(self) -> int:
        """Δ(G); 0 for edgeless and empty graphs."""
        return max((len(nbrs) for nbrs in self.adjacency), default=0)

    def degree_sequence(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def edges_within(self, s: Iterable[int]) -> EdgeSet:
        """Every edge with both endpoints in ``s``."""
        vs = self._check_all(s)
        return frozenset(e for e in self.edges if e[0] in vs and e[1] in vs)

    def is_independent(self, s: Iterable[int]) -> bool:
        vs = self._check_all(s)
        return all(not (self.adjacency[v] & vs) for v in vs)

    def is_bipartite(self) -> bool:
        return bool(nx.is_bipartite(self.to_networkx()))

    def without(self, s: Iterable[int]) -> Graph:
        """G − S with ids preserved: the vertices of ``s`` stay, isolated."""
        vs = self._check_all(s)
        return Graph(self.n, frozenset(e for e in self.edges if e[0] not in vs and e[1] not in vs))
