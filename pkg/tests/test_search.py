# tests/test_search.py

import pytest

from src.constructions import build_complete, build_path, build_star
from src.core.counting import spanning_tree_count
from src.core.errors import DisconnectedGraphError, EmptyGraphError, ParameterError
from src.core.graph import Graph
from src.engine.enumeration import iter_spanning_trees
from src.engine.profile import tree_profile
from src.engine.search import exists_tree_all_internal_at_least, max_min_internal_degree
from src.engine.tree import SpanningTree
from src.models.inputs import SearchBudget
from src.models.outputs import Verdict
from tests.corpus import connected_corpus


def enumerated_mmid(g: Graph):
    """Reference value: best minimum internal degree over every spanning tree."""
    if g.vertex_count <= 2:
        return None
    return max(tree_profile(g, t).min_internal_degree for t in iter_spanning_trees(g))


def assert_witness(g: Graph, k: int, witness):
    profile = tree_profile(g, SpanningTree.from_edges(g.vertex_count, witness))
    assert all(profile.tree_degree[v] >= k for v in profile.internals)


class TestDecision:
    def test_complete_graph_star_witness(self, k4):
        result = exists_tree_all_internal_at_least(k4, 3)
        assert result.verdict == Verdict.TRUE
        assert result.witness == [(0, 1), (0, 2), (0, 3)]
        assert result.exhaustive

    def test_k2_is_always_true(self):
        for g in connected_corpus(30):
            if g.vertex_count >= 3:
                result = exists_tree_all_internal_at_least(g, 2)
                assert result.verdict == Verdict.TRUE
                assert_witness(g, 2, result.witness)

    def test_tiny_graphs_are_vacuously_true(self):
        assert exists_tree_all_internal_at_least(Graph(1), 5).verdict == Verdict.TRUE
        assert exists_tree_all_internal_at_least(Graph(2, [(0, 1)]), 5).verdict == Verdict.TRUE

    def test_k_below_two(self, k4):
        with pytest.raises(ParameterError, match=r"k < 2"):
            exists_tree_all_internal_at_least(k4, 1)

    def test_disconnected(self, disconnected):
        with pytest.raises(DisconnectedGraphError):
            exists_tree_all_internal_at_least(disconnected, 3)

    def test_cycle_has_no_k3_tree(self, c6):
        result = exists_tree_all_internal_at_least(c6, 3)
        assert result.verdict == Verdict.FALSE
        assert result.witness is None

    def test_counterexample_d2_and_d3_are_false(self, ce_2_8, ce_3_15):
        for g, _ in (ce_2_8, ce_3_15):
            result = exists_tree_all_internal_at_least(g, 3)
            assert result.verdict == Verdict.FALSE
            assert result.exhaustive

    def test_counterexample_d4_is_false_within_budget(self, ce_4_24):
        g, _ = ce_4_24
        result = exists_tree_all_internal_at_least(g, 3, SearchBudget(node_limit=10**8))
        assert result.verdict == Verdict.FALSE
        assert result.usage.exhausted is None
        assert result.usage.nodes_explored < 10**8

    def test_budget_exhaustion_is_indeterminate(self):
        result = exists_tree_all_internal_at_least(
            build_complete(7), 6, SearchBudget(node_limit=2)
        )
        assert result.verdict == Verdict.INDETERMINATE
        assert not result.exhaustive
        assert result.usage.exhausted == "nodes"

    def test_agrees_with_enumeration(self):
        for g in connected_corpus(60, seed=100):
            if g.vertex_count < 3 or spanning_tree_count(g) > 5000:
                continue
            best = enumerated_mmid(g)
            for k in (3, 4):
                result = exists_tree_all_internal_at_least(g, k)
                assert result.verdict == Verdict.of(best >= k)
                if result.verdict == Verdict.TRUE:
                    assert_witness(g, k, result.witness)

    @pytest.mark.slow
    def test_parallel_matches_serial(self, ce_3_15):
        g, _ = ce_3_15
        assert exists_tree_all_internal_at_least(g, 3, workers=2).verdict == Verdict.FALSE
        parallel = exists_tree_all_internal_at_least(build_complete(5), 4, workers=2)
        assert parallel.verdict == Verdict.TRUE
        assert_witness(build_complete(5), 4, parallel.witness)


class TestMaxMinInternalDegree:
    @pytest.mark.parametrize("m", [4, 5, 6, 7])
    def test_complete_graphs(self, m):
        result = max_min_internal_degree(build_complete(m))
        assert result.value == m - 1
        assert result.exhaustive
        assert result.witness == [(0, v) for v in range(1, m)]

    def test_small_families(self, c6):
        assert max_min_internal_degree(c6).value == 2
        assert max_min_internal_degree(build_path(3)).value == 2
        assert max_min_internal_degree(build_star(4)).value == 4

    def test_counterexamples(self, ce_2_8, ce_3_15):
        for g, _ in (ce_2_8, ce_3_15):
            result = max_min_internal_degree(g)
            assert result.value == 2
            assert result.exhaustive
            assert [d.verdict for d in result.decisions] == [Verdict.FALSE]

    def test_no_internal_vertex(self):
        result = max_min_internal_degree(Graph(2, [(0, 1)]))
        assert result.value is None
        assert result.exhaustive
        assert result.witness == [(0, 1)]

    def test_empty_and_disconnected(self, disconnected):
        with pytest.raises(EmptyGraphError):
            max_min_internal_degree(Graph(0))
        with pytest.raises(DisconnectedGraphError):
            max_min_internal_degree(disconnected)

    def test_budget_exhaustion_is_not_exhaustive(self):
        result = max_min_internal_degree(build_complete(7), SearchBudget(node_limit=3))
        assert not result.exhaustive
        assert result.value >= 2

    def test_agrees_with_enumeration(self):
        for g in connected_corpus(60):
            if spanning_tree_count(g) > 5000:
                continue
            assert max_min_internal_degree(g).value == enumerated_mmid(g)

    @pytest.mark.slow
    def test_agrees_with_enumeration_on_full_corpus(self):
        for g in connected_corpus(200, seed=1000):
            result = max_min_internal_degree(g)
            assert result.value == enumerated_mmid(g)
            if result.value is not None:
                assert_witness(g, result.value, result.witness)
