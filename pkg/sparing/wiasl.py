"""Weak integer additive set-labelings (WIASL).

Vertices get nonempty sets of non-negative integers and every edge gets the
sumset of its endpoint labels. A labeling is weak when each edge label is as
large as one of its endpoint labels, which holds exactly when every edge has
a singleton-labeled endpoint.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field

from .errors import LabelingError, PreconditionError
from .graph import Edge, Graph, sorted_edges

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SetLabel:
    """Finite nonempty set of non-negative integers."""

    elements: frozenset[int]

    def __post_init__(self) -> None:
        if not self.elements:
            raise LabelingError("set-labels must be nonempty")
        if min(self.elements) < 0:
            raise LabelingError(
                f"set-labels hold non-negative integers, got {sorted(self.elements)}"
            )

    @classmethod
    def of(cls, *elements: int) -> SetLabel:
        return cls(frozenset(elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.elements))

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __add__(self, other: SetLabel) -> SetLabel:
        return sumset(self, other)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self) + "}"

    @property
    def is_singleton(self) -> bool:
        return len(self.elements) == 1


def sumset(a: SetLabel, b: SetLabel) -> SetLabel:
    """A + B = {x + y : x in A, y in B}."""
    return SetLabel(frozenset(x + y for x in a.elements for y in b.elements))


@dataclass(frozen=True)
class GroundSet:
    """X = {0, 1, ..., max_element}."""

    max_element: int

    @property
    def size(self) -> int:
        return self.max_element + 1

    def __contains__(self, label: object) -> bool:
        if not isinstance(label, SetLabel):
            return False
        return max(label.elements) <= self.max_element


@dataclass(frozen=True)
class WiaslLabeling:
    vertex_labels: Mapping[int, SetLabel]
    edge_labels: Mapping[Edge, SetLabel]
    independent_set: frozenset[int] = field(default_factory=frozenset)
    ground_set: GroundSet | None = None

    @classmethod
    def induced(
        cls,
        g: Graph,
        vertex_labels: Mapping[int, SetLabel],
        independent_set: Iterable[int] = (),
        ground_set: GroundSet | None = None,
    ) -> WiaslLabeling:
        """Label each edge with the sumset of its endpoint labels."""
        missing = [v for v in g.vertices if v not in vertex_labels]
        if missing:
            raise LabelingError(f"no label for vertices {missing}")
        edge_labels = {
            (u, v): vertex_labels[u] + vertex_labels[v] for u, v in sorted_edges(g.edges)
        }
        return cls(dict(vertex_labels), edge_labels, frozenset(independent_set), ground_set)


def build_labeling(g: Graph, i: Iterable[int]) -> WiaslLabeling:
    """Singletons {0}..{s-1} for V − I and pairs {s+2k, s+2k+1} for I, both in id order."""
    chosen = frozenset(i)
    if not g.is_independent(chosen):
        raise PreconditionError(
            f"vertex set {sorted(chosen)} is not independent; "
            "an edge between two non-singleton labels cannot be weak"
        )
    singletons = [v for v in g.vertices if v not in chosen]
    s = len(singletons)
    labels: dict[int, SetLabel] = {v: SetLabel.of(k) for k, v in enumerate(singletons)}
    for k, v in enumerate(sorted(chosen)):
        labels[v] = SetLabel.of(s + 2 * k, s + 2 * k + 1)
    ground = GroundSet(max(s + 2 * len(chosen) - 1, 0))
    return WiaslLabeling.induced(g, labels, chosen, ground)


@dataclass
class VerificationReport:
    """Outcome of every WIASL check; failures are collected, never raised."""

    duplicate_labels: list[tuple[int, int]] = field(default_factory=list)
    sumset_mismatches: list[Edge] = field(default_factory=list)
    weak_violations: list[Edge] = field(default_factory=list)
    uncovered_edges: list[Edge] = field(default_factory=list)
    outside_ground_set: list[int] = field(default_factory=list)
    mono_indexed_edge_count: int = 0

    @property
    def injective(self) -> bool:
        return not self.duplicate_labels

    @property
    def passed(self) -> bool:
        return not (
            self.duplicate_labels
            or self.sumset_mismatches
            or self.weak_violations
            or self.uncovered_edges
            or self.outside_ground_set
        )

    def problems(self) -> list[str]:
        out = [f"vertices {u} and {v} share a label" for u, v in self.duplicate_labels]
        out += [f"edge {u}-{v} label is not the endpoint sumset" for u, v in self.sumset_mismatches]
        out += [f"edge {u}-{v} violates the weak condition" for u, v in self.weak_violations]
        out += [f"edge {u}-{v} has no singleton endpoint" for u, v in self.uncovered_edges]
        out += [f"vertex {v} label leaves the ground set" for v in self.outside_ground_set]
        return out


def verify_wiasl(g: Graph, lab: WiaslLabeling) -> VerificationReport:
    missing = [v for v in g.vertices if v not in lab.vertex_labels]
    if missing:
        raise LabelingError(f"labeling does not cover vertices {missing}")
    f = lab.vertex_labels
    report = VerificationReport()

    first_owner: dict[SetLabel, int] = {}
    for v in g.vertices:
        owner = first_owner.setdefault(f[v], v)
        if owner != v:
            report.duplicate_labels.append((owner, v))
        if lab.ground_set is not None and f[v] not in lab.ground_set:
            report.outside_ground_set.append(v)

    for u, v in sorted_edges(g.edges):
        induced = f[u] + f[v]
        label = lab.edge_labels.get((u, v))
        if label != induced:
            report.sumset_mismatches.append((u, v))
        size = len(label) if label is not None else len(induced)
        if size not in (len(f[u]), len(f[v])):
            report.weak_violations.append((u, v))
        if not (f[u].is_singleton or f[v].is_singleton):
            report.uncovered_edges.append((u, v))
        if size == 1:
            report.mono_indexed_edge_count += 1

    if not report.passed:
        logger.warning("labeling failed verification: %s", "; ".join(report.problems()))
    return report


def mono_indexed_count(g: Graph, lab: WiaslLabeling) -> int:
    """Edges whose set-label is a singleton."""
    return sum(1 for u, v in g.edges if len(lab.edge_labels[(u, v)]) == 1)


def format_labeling(g: Graph, lab: WiaslLabeling) -> list[str]:
    lines = [f"v {v} {lab.vertex_labels[v]}" for v in g.vertices]
    for u, v in sorted_edges(g.edges):
        label = lab.edge_labels[(u, v)]
        lines.append(f"e {u} {v} {label} mono={int(len(label) == 1)}")
    return lines
