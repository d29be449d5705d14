"""Tests for the exact sparing-number solvers and their agreement."""

from __future__ import annotations

import itertools
import random

import pytest

from sparing import generators
from sparing.errors import BudgetExceededError, LabelingError, PreconditionError
from sparing.exact import (
    ExactConfig,
    ExactMethod,
    enumerate_maximal_independent_sets,
    independent_subsets,
    max_incidence,
    maximal_independent_subsets,
    sparing_brute_labelings,
    sparing_exact,
)
from sparing.generators import a, figure1, generate
from sparing.graph import Graph
from sparing.greedy import run_greedy
from sparing.result import Method

BRUTE = ExactConfig(method=ExactMethod.BRUTE_SUBSETS)
K5_EDGES = list(itertools.combinations(range(5), 2))


def seeded_graphs(seed: int, count: int, n_max: int) -> list[Graph]:
    rng = random.Random(seed)
    return [
        generators.random(rng.randint(1, n_max), rng.random(), rng.randrange(2**31))
        for _ in range(count)
    ]


class TestFigure1:
    """The worked example's true optimum."""

    def test_exact_phi(self) -> None:
        """phi = 5, one less than the greedy result."""
        result = sparing_exact(figure1())
        assert result.phi == 5
        assert result.proven_optimal
        assert result.method is Method.EXACT

    def test_unique_optimum(self) -> None:
        """I* = {a2, a4, a6, a8, a11, a13}."""
        result = sparing_exact(figure1())
        assert result.independent_set == frozenset(a(k) for k in (2, 4, 6, 8, 11, 13))
        expected = {(1, 7), (3, 5), (5, 14), (9, 10), (9, 12)}
        assert result.mono_edges == frozenset((a(u), a(v)) for u, v in expected)

    def test_max_incidence(self) -> None:
        """The optimum covers 21 of the 26 edges; the greedy set covers 20."""
        g = figure1()
        assert max_incidence(g, sparing_exact(g).independent_set) == 21
        assert max_incidence(g, run_greedy(g).independent_set) == 20


class TestClosedForms:
    """Families with known sparing numbers."""

    @pytest.mark.parametrize("n", range(2, 10))
    def test_complete(self, n: int) -> None:
        """phi(K_n) = (n - 1)(n - 2)/2."""
        assert sparing_exact(generate(f"complete:{n}")).phi == (n - 1) * (n - 2) // 2

    @pytest.mark.parametrize("k", range(1, 6))
    def test_odd_cycle(self, k: int) -> None:
        """phi(C_{2k+1}) = 1."""
        assert sparing_exact(generate(f"cycle:{2 * k + 1}")).phi == 1

    @pytest.mark.parametrize("k", range(2, 6))
    def test_even_cycle(self, k: int) -> None:
        """phi(C_{2k}) = 0."""
        assert sparing_exact(generate(f"cycle:{2 * k}")).phi == 0

    def test_c2_is_an_edge(self) -> None:
        """k = 1: the 2-vertex cycle degenerates to a single edge, phi = 0."""
        assert sparing_exact(generate("path:2")).phi == 0

    def test_trees(self) -> None:
        """phi = 0 for 50 random trees on at most 15 vertices."""
        rng = random.Random(3)
        for _ in range(50):
            tree = generators.random_tree(rng.randint(1, 15), rng.randrange(2**31))
            assert sparing_exact(tree).phi == 0

    def test_complete_bipartite(self) -> None:
        """K_{3,4} is bipartite."""
        assert sparing_exact(generate("complete_bipartite:3,4")).phi == 0

    def test_c5_tie_break(self) -> None:
        """All five optima tie; the lexicographically smallest wins."""
        result = sparing_exact(generate("cycle:5"))
        assert result.independent_set == frozenset({0, 2})
        assert result.mono_edges == frozenset({(3, 4)})


class TestOracleEquivalence:
    """Maximal-set enumeration, subset enumeration and role enumeration agree."""

    def test_every_graph_on_five_vertices(self) -> None:
        """All 1024 edge subsets of K5."""
        for mask in range(1 << len(K5_EDGES)):
            g = Graph.from_edges(5, [e for i, e in enumerate(K5_EDGES) if mask >> i & 1])
            fast = sparing_exact(g)
            slow = sparing_exact(g, BRUTE)
            assert fast.phi == slow.phi == sparing_brute_labelings(g), sorted(g.edges)
            assert fast.independent_set == slow.independent_set, sorted(g.edges)

    def test_small_vertex_counts(self) -> None:
        """Graphs on 0 to 4 vertices, all edge subsets."""
        for n in range(5):
            pairs = list(itertools.combinations(range(n), 2))
            for mask in range(1 << len(pairs)):
                g = Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
                fast = sparing_exact(g)
                slow = sparing_exact(g, BRUTE)
                assert fast.phi == slow.phi == sparing_brute_labelings(g)
                assert fast.independent_set == slow.independent_set

    def test_isolated_vertex_same_set(self) -> None:
        """An isolated vertex goes into I for both methods."""
        g = Graph.from_edges(3, [(0, 1)])
        assert sparing_exact(g).independent_set == frozenset({0, 2})
        assert sparing_exact(g, BRUTE).independent_set == frozenset({0, 2})

    def test_random_graphs(self) -> None:
        """300 seeded random graphs on at most 8 vertices."""
        for g in seeded_graphs(seed=17, count=300, n_max=8):
            fast = sparing_exact(g)
            slow = sparing_exact(g, BRUTE)
            assert fast.phi == slow.phi == sparing_brute_labelings(g), sorted(g.edges)
            assert fast.independent_set == slow.independent_set, sorted(g.edges)


class TestProperties:
    """Structural facts the solver relies on."""

    def test_bipartite_iff_zero(self) -> None:
        """phi = 0 exactly for bipartite graphs, on 200 graphs with n <= 14."""
        for g in seeded_graphs(seed=23, count=200, n_max=14):
            assert (sparing_exact(g).phi == 0) == g.is_bipartite()

    def test_greedy_is_an_upper_bound(self) -> None:
        """phi_greedy >= phi_exact on 300 graphs with n <= 12."""
        for g in seeded_graphs(seed=29, count=300, n_max=12):
            greedy = run_greedy(g)
            assert g.is_independent(greedy.independent_set)
            assert greedy.phi >= sparing_exact(g).phi

    def test_adding_a_vertex_never_hurts(self) -> None:
        """|E(G - (I + v))| <= |E(G - I)| whenever I + v stays independent."""
        rng = random.Random(31)
        for g in seeded_graphs(seed=37, count=60, n_max=9):
            subsets = list(independent_subsets(g))
            for i in rng.sample(subsets, min(10, len(subsets))):
                rest = set(g.vertices) - i
                for v in rest:
                    if g.open_neighborhood(v) & i:
                        continue
                    before = len(g.edges_within(rest))
                    after = len(g.edges_within(rest - {v}))
                    assert after <= before

    def test_maximal_sets_are_maximal(self) -> None:
        """Every enumerated set is independent and dominating."""
        for g in seeded_graphs(seed=41, count=50, n_max=10):
            for i in enumerate_maximal_independent_sets(g):
                assert g.is_independent(i)
                for v in g.vertices:
                    assert v in i or g.open_neighborhood(v) & i

    def test_maximal_sets_of_c5(self) -> None:
        """C5 has exactly five maximal independent sets."""
        found = {tuple(sorted(i)) for i in enumerate_maximal_independent_sets(generate("cycle:5"))}
        assert found == {(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)}

    def test_independent_subsets_count(self) -> None:
        """P_3 has five independent subsets, the empty set included."""
        subsets = list(independent_subsets(generate("path:3")))
        assert len(subsets) == 5
        assert frozenset() in subsets

    def test_maximal_subsets_match_enumeration(self) -> None:
        """Filtered subsets and complement cliques give the same family."""
        for g in seeded_graphs(seed=43, count=50, n_max=9):
            filtered = set(maximal_independent_subsets(g))
            assert filtered == set(enumerate_maximal_independent_sets(g))


class TestEdgeCases:
    """Degenerate inputs and configuration."""

    def test_empty_graph(self) -> None:
        """The empty graph has phi = 0 with the empty set."""
        for cfg in (None, BRUTE):
            result = sparing_exact(Graph(0), cfg)
            assert result.phi == 0
            assert result.independent_set == frozenset()

    def test_edgeless_graph(self) -> None:
        """Every vertex goes into I."""
        assert sparing_exact(Graph(4)).independent_set == frozenset(range(4))

    def test_brute_method_tag(self) -> None:
        """Subset enumeration reports the brute method."""
        assert sparing_exact(generate("cycle:4"), BRUTE).method is Method.BRUTE

    def test_brute_vertex_limit(self) -> None:
        """Subset enumeration refuses graphs above its limit."""
        cfg = ExactConfig(method=ExactMethod.BRUTE_SUBSETS, vertex_limit_brute=4)
        with pytest.raises(PreconditionError, match="limited to 4 vertices"):
            sparing_exact(generate("path:5"), cfg)

    def test_max_incidence_requires_independence(self) -> None:
        """Adjacent vertices are rejected."""
        with pytest.raises(PreconditionError):
            max_incidence(generate("path:3"), {0, 1})


class TestBudget:
    """Time budgets return an upper bound instead of an optimum."""

    def test_zero_budget(self) -> None:
        """A zero budget stops before the first candidate with the greedy bound."""
        with pytest.raises(BudgetExceededError) as exc_info:
            sparing_exact(figure1(), ExactConfig(time_budget=0.0))
        best = exc_info.value.best
        assert not best.proven_optimal
        assert best.phi == 6
        assert exc_info.value.budget == 0.0
        assert "phi <= 6" in str(exc_info.value)

    def test_generous_budget(self) -> None:
        """A budget that is never reached changes nothing."""
        result = sparing_exact(figure1(), ExactConfig(time_budget=60.0))
        assert result.phi == 5
        assert result.proven_optimal


class TestBruteLabelings:
    """The definitional oracle over singleton and non-singleton roles."""

    def test_figure1_too_large(self) -> None:
        """Role enumeration is capped at ten vertices by default."""
        with pytest.raises(LabelingError, match="limited to 10 vertices"):
            sparing_brute_labelings(figure1())

    def test_raised_limit(self) -> None:
        """With the cap raised it agrees with the exact solver on figure1."""
        assert sparing_brute_labelings(figure1(), vertex_limit=14) == 5

    def test_negative_ground_set(self) -> None:
        """Ground set sizes are non-negative."""
        with pytest.raises(LabelingError):
            sparing_brute_labelings(generate("path:2"), ground_set_size=-1)

    def test_infeasible_ground_set(self) -> None:
        """Three vertices cannot get distinct labels from a one-element ground set."""
        with pytest.raises(LabelingError, match="cannot label"):
            sparing_brute_labelings(Graph(3), ground_set_size=1)

    def test_small_ground_set_forces_non_singletons(self) -> None:
        """A two-element ground set cannot label K_{1,3}; three elements can."""
        # 4 vertices, X = {0, 1}: at most 2 singletons and 1 non-singleton
        with pytest.raises(LabelingError):
            sparing_brute_labelings(generate("star:3"), ground_set_size=2)
        assert sparing_brute_labelings(generate("star:3"), ground_set_size=3) == 0
