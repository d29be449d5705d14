"""Edge-list text format and DOT emission.

Edge-list format: one edge per line as two whitespace-separated non-negative
integers. Lines starting with ``#`` are comments and blank lines are ignored.
The vertex count is ``max id + 1`` unless the first significant line is a
header ``n <count>``.
"""

from __future__ import annotations

from collections.abc import Iterable
from pathlib import Path

from .errors import GraphParseError
from .graph import Edge, Graph, edge, sorted_edges


def _parse_int(token: str, line_no: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphParseError(line_no, f"expected a non-negative integer, got {token!r}") from None
    if value < 0:
        raise GraphParseError(line_no, f"negative vertex id {value}")
    return value


def parse_edge_list(text: str) -> Graph:
    declared: int | None = None
    seen_edge = False
    edges: dict[Edge, int] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if seen_edge or declared is not None:
                raise GraphParseError(line_no, "header 'n <count>' must be the first line")
            if len(tokens) != 2:
                raise GraphParseError(line_no, "header must be 'n <count>'")
            declared = _parse_int(tokens[1], line_no)
            continue
        if len(tokens) != 2:
            raise GraphParseError(line_no, f"expected two vertex ids, got {len(tokens)} fields")
        u, v = (_parse_int(t, line_no) for t in tokens)
        if u == v:
            raise GraphParseError(line_no, f"self-loop at vertex {u}")
        e = edge(u, v)
        if e in edges:
            raise GraphParseError(line_no, f"duplicate edge {u} {v} (first on line {edges[e]})")
        if declared is not None and e[1] >= declared:
            raise GraphParseError(line_no, f"vertex {e[1]} exceeds declared count {declared}")
        edges[e] = line_no
        seen_edge = True

    if declared is None:
        declared = max((v for _, v in edges), default=-1) + 1
    return Graph(declared, frozenset(edges))


def serialize_edge_list(g: Graph) -> str:
    """Text form with an explicit header, so isolated vertices survive a round trip."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted_edges(g.edges))
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> Graph:
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line_no = data.count(b"\n", 0, exc.start) + 1
        raise GraphParseError(line_no, f"not UTF-8 text (byte {exc.start})") from None
    return parse_edge_list(text)


def write_edge_list(g: Graph, path: str | Path) -> None:
    Path(path).write_text(serialize_edge_list(g))


def to_dot(
    g: Graph,
    independent_set: Iterable[int] = (),
    mono_edges: Iterable[Edge] = (),
    name: str = "G",
) -> str:
    """Graphviz DOT text; vertices of ``independent_set`` are double circles and
    ``mono_edges`` are drawn bold."""
    chosen = frozenset(independent_set)
    bold = frozenset(edge(u, v) for u, v in mono_edges)
    out = [f"graph {name} {{"]
    for v in g.vertices:
        attrs = " [shape=doublecircle]" if v in chosen else ""
        out.append(f"  {v}{attrs};")
    for u, v in sorted_edges(g.edges):
        attrs = " [style=bold]" if (u, v) in bold else ""
        out.append(f"  {u} -- {v}{attrs};")
    out.append("}")
    return "\n".join(out) + "\n"
