# tests/test_constructions.py

import pytest
from pydantic import ValidationError

from src.constructions import (
    build_counterexample,
    build_cycle,
    build_path,
    build_random_connected,
    build_random_regular,
    build_star,
    expected_edge_count,
)
from src.core.errors import ParameterError, RetryBudgetExceeded
from src.core.graph import is_connected, min_degree
from src.models.inputs import CounterexampleParams
from src.models.roles import Role, RoleLabels


class TestCounterexampleParams:
    def test_rejects_small_degree(self):
        with pytest.raises(ValidationError, match=r"d < 2"):
            CounterexampleParams(d=1, n=10)

    def test_rejects_small_n(self):
        with pytest.raises(ValidationError, match=r"n < d\(d\+2\)"):
            CounterexampleParams(d=2, n=7)

    def test_minimal(self):
        params = CounterexampleParams.minimal(4)
        assert params.n == 24
        assert params.tail_size == 5


class TestCounterexample:
    def test_d2_layout(self, ce_2_8):
        g, labels = ce_2_8
        assert g.vertex_count == 8
        assert g.edge_count == 9
        assert min_degree(g) == 2
        assert labels.roles == (
            Role.CORE_HUB,
            Role.CORE,
            Role.PENDANT_ANCHOR,
            Role.PENDANT_BODY,
            Role.PENDANT_BODY,
            Role.TAIL_ANCHOR,
            Role.TAIL_BODY,
            Role.TAIL_BODY,
        )
        assert labels.anchor_edges() == [(0, 5), (1, 2)]

    def test_d3_edge_count(self, ce_3_15):
        g, _ = ce_3_15
        assert g.vertex_count == 15
        assert g.edge_count == 24

    def test_d4_block_layout(self, ce_4_24):
        g, labels = ce_4_24
        assert labels.core_vertices() == [0, 1, 2, 3]
        assert [labels.anchor_of(i) for i in (1, 2, 3)] == [4, 9, 14]
        assert labels.anchor_of(0) == 19
        assert labels.vertices_with(Role.TAIL_ANCHOR, Role.TAIL_BODY) == list(range(19, 24))
        assert all(labels.owner[v] == 2 for v in range(9, 14))

    @pytest.mark.parametrize("d,n", [(2, 8), (2, 12), (3, 15), (3, 20), (4, 24), (5, 35), (6, 48)])
    def test_structural_invariants(self, d, n):
        params = CounterexampleParams(d=d, n=n)
        g, labels = build_counterexample(params)
        assert g.vertex_count == n
        assert is_connected(g)
        assert min_degree(g) == d
        assert g.edge_count == expected_edge_count(params)
        assert all(g.degree(u) == d for u in labels.core_vertices())

    def test_role_labels_round_trip_json(self, ce_3_15):
        _, labels = ce_3_15
        assert RoleLabels.model_validate_json(labels.model_dump_json()) == labels

    def test_role_labels_reject_bad_counts(self, ce_2_8):
        _, labels = ce_2_8
        roles = list(labels.roles)
        roles[1] = Role.PENDANT_BODY
        with pytest.raises(ValidationError):
            RoleLabels(d=2, roles=tuple(roles), owner=labels.owner)


class TestFamilies:
    def test_small_families(self):
        assert build_path(1).edge_count == 0
        assert build_cycle(5).edge_count == 5
        assert build_star(4).degree(0) == 4

    def test_cycle_bound(self):
        with pytest.raises(ParameterError, match=r"cycle needs m >= 3"):
            build_cycle(2)

    def test_random_regular_is_regular_and_reproducible(self):
        g = build_random_regular(3, 10, seed=7)
        assert all(g.degree(v) == 3 for v in g.vertices())
        assert g == build_random_regular(3, 10, seed=7)

    def test_random_regular_bounds(self):
        with pytest.raises(ParameterError, match="dm odd"):
            build_random_regular(3, 7, seed=0)
        with pytest.raises(ParameterError, match=r"m <= d"):
            build_random_regular(4, 4, seed=0)

    def test_random_regular_retry_budget(self):
        # K_{d+1} needs every stub pairing to be perfect; one attempt almost never suffices
        with pytest.raises(RetryBudgetExceeded):
            for seed in range(50):
                build_random_regular(7, 8, seed=seed, max_attempts=1)

    def test_random_connected(self):
        for seed in range(20):
            assert is_connected(build_random_connected(8, 0.1, seed))
