# tests/test_counting.py

import pytest

from src.constructions import build_complete, build_counterexample, build_cycle, build_path
from src.core.counting import (
    bareiss_determinant,
    cayley,
    counterexample_tree_count,
    spanning_tree_count,
)
from src.core.graph import Graph
from src.engine.enumeration import count_by_enumeration
from src.models.inputs import CounterexampleParams
from tests.corpus import connected_corpus


class TestBareiss:
    def test_small_determinants(self):
        assert bareiss_determinant([]) == 1
        assert bareiss_determinant([[5]]) == 5
        assert bareiss_determinant([[2, 1], [1, 2]]) == 3
        assert bareiss_determinant([[1, 2], [2, 4]]) == 0

    def test_row_swap_flips_sign(self):
        assert bareiss_determinant([[0, 1], [1, 0]]) == -1
        assert bareiss_determinant([[0, 2, 1], [1, 0, 0], [0, 0, 3]]) == -6


class TestSpanningTreeCount:
    @pytest.mark.parametrize("m", range(1, 9))
    def test_cayley_formula(self, m):
        assert spanning_tree_count(build_complete(m)) == cayley(m)

    def test_cycle_and_path(self):
        assert spanning_tree_count(build_cycle(7)) == 7
        assert spanning_tree_count(build_path(9)) == 1

    def test_degenerate_graphs(self, disconnected):
        assert spanning_tree_count(Graph(0)) == 0
        assert spanning_tree_count(Graph(1)) == 1
        assert spanning_tree_count(disconnected) == 0

    def test_counterexample_counts(self, ce_2_8, ce_3_15, ce_4_24):
        assert spanning_tree_count(ce_2_8[0]) == 9
        assert spanning_tree_count(ce_3_15[0]) == 12288
        assert spanning_tree_count(ce_4_24[0]) == 3906250000 == 16 * 5**12

    @pytest.mark.parametrize("d,n", [(2, 8), (2, 11), (3, 15), (3, 18), (4, 24), (5, 35)])
    def test_block_formula_matches_determinant(self, d, n):
        g, _ = build_counterexample(CounterexampleParams(d=d, n=n))
        assert spanning_tree_count(g) == counterexample_tree_count(d, n)

    def test_determinant_matches_enumeration(self):
        for g in connected_corpus(80):
            expected = spanning_tree_count(g)
            if expected <= 20_000:
                assert count_by_enumeration(g) == expected

    def test_count_exceeds_float_precision_exactly(self):
        count = spanning_tree_count(build_complete(20))
        assert count == 20**18
        assert count > 2**53
