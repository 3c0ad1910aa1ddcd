# tests/test_comparators.py

import random
from collections import Counter

import pytest

from src.constructions import build_complete, build_cycle, build_path, build_star
from src.core.errors import DisconnectedGraphError, EmptyGraphError
from src.core.graph import Graph
from src.engine.greedy import max_leaf_greedy
from src.engine.profile import validate_tree
from src.engine.sampling import sample_spanning_tree, sample_spanning_trees
from src.engine.tree import SpanningTree
from tests.corpus import connected_corpus


def key(tree: SpanningTree) -> tuple:
    return tuple(tree.as_list())


class TestMaxLeafGreedy:
    def test_cycle(self, c6):
        result = max_leaf_greedy(c6)
        assert result.leaf_count == 2
        assert result.vertex_count == 6
        assert result.leaf_fraction == pytest.approx(1 / 3)

    def test_complete_graph_gives_star(self, k4):
        result = max_leaf_greedy(k4)
        assert result.tree == [(0, 1), (0, 2), (0, 3)]
        assert result.leaf_count == 3

    def test_star_and_path(self):
        assert max_leaf_greedy(build_star(5)).leaf_count == 5
        assert max_leaf_greedy(build_path(5)).leaf_count == 2

    def test_single_vertex(self):
        result = max_leaf_greedy(Graph(1))
        assert result.tree == []
        assert result.leaf_count == 0

    def test_trees_are_valid(self):
        for g in connected_corpus(40):
            result = max_leaf_greedy(g)
            validate_tree(g, SpanningTree.from_edges(g.vertex_count, result.tree))

    def test_errors(self, disconnected):
        with pytest.raises(EmptyGraphError):
            max_leaf_greedy(Graph(0))
        with pytest.raises(DisconnectedGraphError):
            max_leaf_greedy(disconnected)


class TestSampling:
    def test_samples_are_spanning_trees(self):
        for i, g in enumerate(connected_corpus(40)):
            for tree in sample_spanning_trees(g, 3, seed=i):
                validate_tree(g, tree)

    def test_seed_reproducibility(self, ce_3_15):
        g, _ = ce_3_15
        assert sample_spanning_trees(g, 5, seed=3) == sample_spanning_trees(g, 5, seed=3)

    def test_roughly_uniform_on_k4(self):
        counts = Counter(key(t) for t in sample_spanning_trees(build_complete(4), 3200, seed=1))
        assert len(counts) == 16
        assert all(120 <= c <= 280 for c in counts.values())

    def test_cycle_drops_each_edge(self):
        counts = Counter(key(t) for t in sample_spanning_trees(build_cycle(4), 800, seed=2))
        assert len(counts) == 4
        assert all(120 <= c <= 280 for c in counts.values())

    def test_errors(self, disconnected):
        with pytest.raises(EmptyGraphError):
            sample_spanning_tree(Graph(0), random.Random(0))
        with pytest.raises(DisconnectedGraphError):
            sample_spanning_tree(disconnected, random.Random(0))
