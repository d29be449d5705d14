"""Exception hierarchy for the sparing package."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .result import SparingResult


class SparingError(Exception):
    """Base class for every error raised by this package."""


class GraphError(SparingError, ValueError):
    """A graph could not be constructed (self-loop, duplicate edge, bad id)."""


class InvalidVertexError(GraphError, IndexError):
    """A vertex id lies outside ``[0, n)``."""

    def __init__(self, vertex: int, n: int) -> None:
        super().__init__(f"vertex {vertex} is not in [0, {n})")
        self.vertex = vertex
        self.n = n


class GraphParseError(GraphError):
    """Malformed edge-list text."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.message = message


class GeneratorSpecError(GraphError):
    """Unknown generator family or invalid generator parameters."""


class PreconditionError(SparingError, ValueError):
    """An operation was called with arguments violating its precondition."""


class ReplayError(PreconditionError):
    """A forced greedy pick order is invalid or incomplete."""

    def __init__(self, message: str, pick: int | None = None, position: int | None = None) -> None:
        super().__init__(message)
        self.pick = pick
        self.position = position


class InvariantError(SparingError, AssertionError):
    """An internal invariant failed."""


class BudgetExceededError(SparingError):
    """The exact solver ran out of time; ``best`` is an upper bound only."""

    def __init__(self, best: SparingResult, budget: float) -> None:
        super().__init__(
            f"time budget of {budget:g}s exceeded; best upper bound phi <= {best.phi}"
        )
        self.best = best
        self.budget = budget


class LabelingError(SparingError, ValueError):
    """Invalid set-label, incomplete labeling or infeasible ground set."""
