# tests/test_certificate.py

import pytest

from src.constructions import build_complete
from src.core.errors import LabelMismatchError, TreeValidationError
from src.engine.certificate import certificate_check, check_labels
from src.engine.sampling import sample_spanning_trees
from src.engine.tree import SpanningTree, bfs_tree


class TestCertificateCheck:
    def test_bfs_tree_passes(self, ce_3_15):
        g, labels = ce_3_15
        report = certificate_check(g, labels, bfs_tree(g))
        assert report.passed
        assert report.forced_bridges_present
        assert report.core_vertices_internal
        assert len(report.induced_core_edges) == 2

    def test_sampled_trees_pass(self, ce_4_24):
        g, labels = ce_4_24
        for tree in sample_spanning_trees(g, 25, seed=11):
            report = certificate_check(g, labels, tree)
            assert report.passed
            assert report.witness_leaf in labels.core_vertices()
            assert report.witness_degree == 2

    def test_reports_every_failed_step(self, ce_2_8):
        g, labels = ce_2_8
        # an extra edge lets a tree bypass the anchor edge (0, 5)
        host = g.with_edges([(1, 5)])
        tree = SpanningTree.from_edges(
            8, [(0, 1), (1, 2), (2, 3), (2, 4), (1, 5), (5, 6), (5, 7)]
        )
        report = certificate_check(host, labels, tree)
        assert not report.forced_bridges_present
        assert not report.core_vertices_internal
        assert report.induced_core_is_tree
        assert report.witness_leaf == 0
        assert report.witness_degree == 1
        assert not report.witness_is_internal
        assert not report.passed

    def test_rejects_non_tree(self, ce_2_8):
        g, labels = ce_2_8
        with pytest.raises(TreeValidationError):
            certificate_check(g, labels, SpanningTree.from_edges(8, [(0, 1)]))


class TestCheckLabels:
    def test_vertex_count_mismatch(self, ce_2_8):
        _, labels = ce_2_8
        with pytest.raises(LabelMismatchError, match="8 vertices"):
            check_labels(build_complete(4), labels)

    def test_missing_anchor_edge(self, ce_2_8):
        g, labels = ce_2_8
        with pytest.raises(LabelMismatchError, match=r"anchor edge \(0, 5\)"):
            check_labels(g.without_edge((0, 5)), labels)

    def test_missing_core_edge(self, ce_3_15):
        g, labels = ce_3_15
        with pytest.raises(LabelMismatchError, match="not adjacent"):
            check_labels(g.without_edge((0, 1)), labels)
