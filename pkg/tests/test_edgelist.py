"""Tests for edge-list parsing, serialization and DOT output."""

from __future__ import annotations

import tempfile
from pathlib import Path

import pytest

from sparing.edgelist import (
    parse_edge_list,
    read_edge_list,
    serialize_edge_list,
    to_dot,
    write_edge_list,
)
from sparing.errors import GraphError, GraphParseError
from sparing.generators import figure1
from sparing.graph import Graph


class TestParse:
    """parse_edge_list accepts comments, blanks and an optional header."""

    def test_plain_edges(self) -> None:
        """n is max id + 1 without a header."""
        g = parse_edge_list("0 1\n1 2\n")
        assert g.n == 3
        assert g.edges == frozenset({(0, 1), (1, 2)})

    def test_comments_and_blank_lines(self) -> None:
        """Comment and blank lines are skipped."""
        g = parse_edge_list("# triangle\n\n0 1\n  # indented comment\n1 2\n2 0\n")
        assert g.edge_count == 3

    def test_header_keeps_isolated_vertices(self) -> None:
        """A header declares vertices beyond the largest id."""
        g = parse_edge_list("n 5\n0 1\n")
        assert g.n == 5
        assert g.degree(4) == 0

    def test_empty_text(self) -> None:
        """No edges and no header is the empty graph."""
        assert parse_edge_list("# nothing\n") == Graph(0)

    def test_reversed_pairs_are_canonical(self) -> None:
        """'3 1' is stored as (1, 3)."""
        assert parse_edge_list("3 1\n").edges == frozenset({(1, 3)})


class TestParseErrors:
    """Malformed lines are reported with their line number."""

    def test_self_loop(self) -> None:
        """Self-loops are rejected on their own line."""
        with pytest.raises(GraphParseError) as exc_info:
            parse_edge_list("0 1\n2 2\n")
        assert exc_info.value.line_no == 2
        assert str(exc_info.value) == "line 2: self-loop at vertex 2"

    def test_duplicate_edge_names_first_line(self) -> None:
        """A repeated edge points back at its first occurrence."""
        message = r"line 3: duplicate edge 1 0 \(first on line 1\)"
        with pytest.raises(GraphParseError, match=message):
            parse_edge_list("0 1\n1 2\n1 0\n")

    def test_wrong_field_count(self) -> None:
        """Each edge line has exactly two fields."""
        with pytest.raises(GraphParseError, match="line 1: expected two vertex ids"):
            parse_edge_list("0 1 2\n")

    def test_non_integer(self) -> None:
        """Vertex ids must be integers."""
        with pytest.raises(GraphParseError, match="line 2"):
            parse_edge_list("0 1\na b\n")

    def test_negative_id(self) -> None:
        """Vertex ids are non-negative."""
        with pytest.raises(GraphParseError, match="negative vertex id -1"):
            parse_edge_list("0 -1\n")

    def test_id_beyond_header(self) -> None:
        """Ids must fit the declared count."""
        with pytest.raises(GraphParseError, match="line 2: vertex 3 exceeds declared count 3"):
            parse_edge_list("n 3\n0 3\n")

    def test_late_header(self) -> None:
        """The header must come before any edge."""
        with pytest.raises(GraphParseError, match="first line"):
            parse_edge_list("0 1\nn 4\n")

    def test_parse_error_is_graph_error(self) -> None:
        """Callers can catch every input problem as GraphError."""
        with pytest.raises(GraphError):
            parse_edge_list("x\n")


class TestSerialize:
    """Serialization and the file helpers."""

    def test_serialize_has_header_and_sorted_edges(self) -> None:
        """Output starts with the header and lists edges in order."""
        g = Graph.from_edges(4, [(2, 1), (0, 1)])
        assert serialize_edge_list(g) == "n 4\n0 1\n1 2\n"

    def test_text_round_trip(self) -> None:
        """figure1 survives serialize then parse."""
        g = figure1()
        assert parse_edge_list(serialize_edge_list(g)) == g

    def test_file_round_trip(self) -> None:
        """write_edge_list then read_edge_list restores isolated vertices too."""
        g = Graph.from_edges(6, [(0, 1), (2, 3)])
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "g.txt"
            write_edge_list(g, path)
            assert read_edge_list(path) == g
            assert read_edge_list(str(path)) == g

    def test_read_rejects_undecodable_bytes(self) -> None:
        """Bytes that are not UTF-8 raise a parse error naming their line."""
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "g.txt"
            path.write_bytes(b"0 1\n\xff\xfe 2\n")
            with pytest.raises(GraphParseError, match="line 2: not UTF-8") as exc_info:
                read_edge_list(path)
        assert exc_info.value.line_no == 2


class TestDot:
    """Graphviz output."""

    def test_plain(self) -> None:
        """Vertices then edges inside a named graph block."""
        g = Graph.from_edges(2, [(0, 1)])
        assert to_dot(g) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n"

    def test_annotations(self) -> None:
        """Independent vertices are double circles and mono edges are bold."""
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        dot = to_dot(g, independent_set={0}, mono_edges={(2, 1)}, name="H")
        assert dot.startswith("graph H {\n")
        assert "  0 [shape=doublecircle];" in dot
        assert "  1;" in dot
        assert "  1 -- 2 [style=bold];" in dot
        assert "  0 -- 1;" in dot
