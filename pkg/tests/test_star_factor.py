# tests/test_star_factor.py

import math
import time
from itertools import combinations, product

import pytest
from pydantic import ValidationError

from src.constructions import build_complete, build_cycle, build_path, build_star
from src.core.errors import EmptyGraphError, NoStarFactorError
from src.core.graph import Graph
from src.models.inputs import SearchBudget, StarBoundParams
from src.models.outputs import Star, Verdict
from src.stars.factor import (
    StarFactor,
    _bound_value,
    _split_centers,
    max_min_star_size,
    star_size_lower_bound,
    validate_star_factor,
)
from tests.corpus import star_corpus


def brute_force_star_size(g: Graph):
    """Best minimum star size over every center set and every leaf assignment."""
    n = g.vertex_count
    best = None
    for size in range(1, n):
        for centers in combinations(range(n), size):
            others = [v for v in range(n) if v not in centers]
            choices = [[c for c in centers if g.has_edge(c, v)] for v in others]
            if any(not options for options in choices):
                continue
            for assignment in product(*choices):
                sizes = [assignment.count(c) for c in centers]
                if min(sizes) >= 1 and (best is None or min(sizes) > best):
                    best = min(sizes)
    return best


class TestStarFactor:
    def test_canonical_form(self):
        f = StarFactor.of([(3, [2]), (0, [4, 1])])
        assert f.stars == (Star(center=0, leaves=(1, 4)), Star(center=2, leaves=(3,)))
        assert f.min_star_size == 1


class TestValidation:
    def test_valid_factor(self, c6):
        check = validate_star_factor(c6, StarFactor.of([(0, [1, 5]), (3, [2, 4])]))
        assert check.valid
        assert check.min_star_size == 2
        assert check.violation is None

    def test_accepts_plain_star_list(self, k4):
        check = validate_star_factor(k4, [Star(center=0, leaves=(1, 2, 3))])
        assert check.valid

    def test_uncovered_vertex(self, c6):
        check = validate_star_factor(c6, StarFactor.of([(0, [1, 5]), (3, [2])]))
        assert not check.valid
        assert check.violation == "vertex 4 not covered"

    def test_covered_twice(self, c6):
        check = validate_star_factor(c6, StarFactor.of([(0, [1, 5]), (2, [1, 3]), (4, [5])]))
        assert not check.valid
        assert "covered twice" in check.violation

    def test_non_adjacent_leaf(self, c6):
        check = validate_star_factor(c6, StarFactor.of([(0, [1, 2]), (3, [4, 5])]))
        assert check.violation == "non-adjacent leaf 2 of center 0"

    def test_empty_star_and_out_of_range(self, k4):
        assert not validate_star_factor(k4, [Star(center=0, leaves=())]).valid
        check = validate_star_factor(k4, [Star(center=0, leaves=(1, 2, 9))])
        assert check.violation == "vertex 9 out of range"


class TestMaxMinStarSize:
    def test_complete_graph(self, k4):
        result = max_min_star_size(k4)
        assert result.value == 3
        assert result.exhaustive

    def test_cycle(self, c6):
        result = max_min_star_size(c6)
        assert result.value == 2
        assert validate_star_factor(c6, result.witness).min_star_size == 2

    def test_counterexample_d2(self, ce_2_8):
        g, _ = ce_2_8
        result = max_min_star_size(g)
        assert result.value == 3
        assert [star.center for star in result.witness] == [2, 5]
        assert result.witness[0].leaves == (1, 3, 4)
        assert result.witness[1].leaves == (0, 6, 7)

    def test_small_families(self):
        assert max_min_star_size(build_star(5)).value == 5
        assert max_min_star_size(build_path(2)).value == 1
        assert max_min_star_size(build_path(5)).value == 1
        assert max_min_star_size(build_cycle(9)).value == 2

    def test_errors(self):
        with pytest.raises(EmptyGraphError):
            max_min_star_size(Graph(0))
        with pytest.raises(NoStarFactorError):
            max_min_star_size(Graph(3, [(0, 1)]))

    def test_budget_exhaustion(self):
        result = max_min_star_size(build_complete(8), SearchBudget(node_limit=5))
        assert result.verdict == Verdict.INDETERMINATE
        assert not result.exhaustive

    def test_witness_is_valid(self):
        for g in star_corpus(40):
            result = max_min_star_size(g)
            check = validate_star_factor(g, result.witness)
            assert check.valid
            assert check.min_star_size == result.value >= 1

    def test_adding_edges_never_lowers_the_optimum(self):
        for g in star_corpus(30, seed=50):
            missing = [(u, v) for u, v in combinations(g.vertices(), 2) if not g.has_edge(u, v)]
            if missing:
                assert max_min_star_size(g.with_edges(missing[:1])).value >= max_min_star_size(g).value

    def test_matches_brute_force(self):
        for g in star_corpus(40):
            assert max_min_star_size(g).value == brute_force_star_size(g)

    @pytest.mark.slow
    def test_matches_brute_force_on_full_corpus(self):
        for g in star_corpus(200, seed=500):
            assert max_min_star_size(g).value == brute_force_star_size(g)

    def test_time_budget_stops_promptly(self, ce_4_24):
        g, _ = ce_4_24
        started = time.monotonic()
        result = max_min_star_size(g, SearchBudget(time_limit=0.5))
        assert time.monotonic() - started < 5.0
        assert result.verdict == Verdict.INDETERMINATE
        assert result.usage.exhausted == "time"

    def test_long_search_path_does_not_recurse(self):
        m = 3000
        g = Graph(2 * m, [(2 * i, 2 * i + 1) for i in range(m)])
        result = max_min_star_size(g)
        assert result.value == 1
        assert len(result.witness) == m
        assert validate_star_factor(g, result.witness).valid

    def test_split_prefixes_follow_search_order(self, k4):
        prefixes = _split_centers(k4, 1, 8)
        assert len(prefixes) >= 2
        assert prefixes == sorted(prefixes)
        assert {prefix[0] for prefix in prefixes} == {1, 2}
        assert _split_centers(k4, 1, 1) == [()]

    def test_parallel_matches_serial(self, ce_2_8, c6):
        for g in (ce_2_8[0], c6, build_complete(5)):
            serial = max_min_star_size(g)
            parallel = max_min_star_size(g, workers=2)
            assert parallel.value == serial.value
            assert parallel.witness == serial.witness
            assert parallel.exhaustive

    @pytest.mark.slow
    def test_parallel_matches_brute_force(self, ce_3_15):
        assert max_min_star_size(ce_3_15[0], workers=2).value == max_min_star_size(ce_3_15[0]).value
        for g in star_corpus(40, seed=900):
            assert max_min_star_size(g, workers=3).value == brute_force_star_size(g)


class TestLowerBound:
    def test_unit_log(self):
        assert _bound_value(1.0, math.e) == pytest.approx(math.e ** (1 / 3), abs=1e-12)

    def test_d2(self):
        value = star_size_lower_bound(StarBoundParams(c=1.0, d=2))
        assert value == pytest.approx((2 / math.log(2)) ** (1 / 3), abs=1e-9)
        assert value == pytest.approx(1.42364, abs=1e-5)

    def test_linear_in_c(self):
        half = star_size_lower_bound(StarBoundParams(c=0.5, d=8))
        assert half == pytest.approx(star_size_lower_bound(StarBoundParams(c=1.0, d=8)) / 2)

    def test_rejects_small_degree(self):
        with pytest.raises(ValidationError, match=r"d < 2"):
            StarBoundParams(c=1.0, d=1)
        with pytest.raises(ValidationError):
            StarBoundParams(c=0.0, d=3)
