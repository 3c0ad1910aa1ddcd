# src/engine/search.py

"""
Branch-and-bound over edge decisions for spanning trees whose internal
vertices all have degree >= k (k = 3 asks for a homeomorphically
irreducible spanning tree), and the max-min internal degree built on it.

Degree state per vertex:
- inc[v]: included edges at v;
- potential[v]: inc[v] plus undecided edges at v, an upper bound on the
  final tree degree.
A vertex with potential < k can never be a valid internal vertex, so it
must end as a leaf: it may not receive a second included edge, and once
it has two the branch is dead. Bridges of the remaining graph are never
excluded, which forces every cut edge into the tree.
"""

from typing import Optional

from config.settings import get_settings
from src.core.errors import BudgetExhausted, DisconnectedGraphError, EmptyGraphError, ParameterError
from src.core.graph import Graph, is_connected, max_degree
from src.engine.branching import ROOT, EdgeBranching, Subproblem, split_frontier
from src.engine.budget import BudgetTracker, merge_usage
from src.engine.enumeration import _ensure_recursion_depth
from src.engine.parallel import run_tasks
from src.engine.tree import SpanningTree, bfs_tree
from src.models.inputs import SearchBudget
from src.models.outputs import BudgetUsage, DecisionResult, MMIDResult, Verdict
from src.utils.logger import get_logger

logger = get_logger("InternalDegreeSearch")


class InternalDegreeSearch(EdgeBranching):
    """Depth-first include/exclude search with degree-state pruning."""

    def __init__(self, graph: Graph, k: int, start: Subproblem, tracker: BudgetTracker):
        super().__init__(graph, start)
        self.k = k
        self.tracker = tracker

        self.inc = [0] * self.n
        for idx in start.chosen:
            u, v = self.edges[idx]
            self.inc[u] += 1
            self.inc[v] += 1
        self.potential = list(self.inc)
        for u, v in self.edges[start.index:]:
            self.potential[u] += 1
            self.potential[v] += 1

    # -------------------------------------------------------------------------
    # Bounds
    # -------------------------------------------------------------------------

    def _dead(self) -> bool:
        k = self.k
        return any(inc >= 2 and pot < k for inc, pot in zip(self.inc, self.potential))

    def _may_include(self, u: int, v: int) -> bool:
        k = self.k
        for x in (u, v):
            if self.inc[x] >= 1 and self.potential[x] < k:
                return False
        return True

    def _may_exclude(self, u: int, v: int) -> bool:
        k = self.k
        for x in (u, v):
            if self.inc[x] >= 2 and self.potential[x] - 1 < k:
                return False
        return True

    def _tree_ok(self) -> bool:
        k = self.k
        return all(inc <= 1 or inc >= k for inc in self.inc)

    # -------------------------------------------------------------------------
    # Branching
    # -------------------------------------------------------------------------

    def run(self) -> Optional[SpanningTree]:
        if self.n <= 2:
            return self.current_tree() if self.tree_complete() else None
        if self._dead():
            return None
        return self.branch(self.start.index)

    def branch(self, i: int) -> Optional[SpanningTree]:
        self.tracker.charge()
        if self.tree_complete():
            return self.current_tree() if self._tree_ok() else None
        if i == self.m:
            return None

        u, v = self.edges[i]
        inc, potential = self.inc, self.potential

        if self.forms_cycle(i):
            if not self._may_exclude(u, v):
                return None
            potential[u] -= 1
            potential[v] -= 1
            found = self.branch(i + 1)
            potential[u] += 1
            potential[v] += 1
            return found

        if self._may_include(u, v):
            self.include(i)
            inc[u] += 1
            inc[v] += 1
            found = self.branch(i + 1)
            inc[u] -= 1
            inc[v] -= 1
            self.undo_include()
            if found is not None:
                return found

        if self._may_exclude(u, v) and not self.is_bridge_of_remaining(i):
            potential[u] -= 1
            potential[v] -= 1
            found = self.branch(i + 1)
            potential[u] += 1
            potential[v] += 1
            return found

        logger.debug(f"k={self.k}: dead branch at edge {i} ({u}, {v})")
        return None


def _decide_subproblem(
    g: Graph, k: int, sub: Subproblem, budget: SearchBudget
) -> tuple[Verdict, Optional[list[tuple[int, int]]], BudgetUsage]:
    _ensure_recursion_depth(g)
    tracker = BudgetTracker(budget)
    try:
        witness = InternalDegreeSearch(g, k, sub, tracker).run()
    except BudgetExhausted:
        return Verdict.INDETERMINATE, None, tracker.get_usage()
    if witness is None:
        return Verdict.FALSE, None, tracker.get_usage()
    return Verdict.TRUE, witness.as_list(), tracker.get_usage()


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError()


def exists_tree_all_internal_at_least(
    g: Graph,
    k: int,
    budget: Optional[SearchBudget] = None,
    workers: int = 1,
) -> DecisionResult:
    """
    Decide whether g has a spanning tree whose internal vertices all have degree >= k.

    Returns TRUE with a witness, FALSE (exhaustive), or INDETERMINATE when
    the budget ran out first. Graphs with n <= 2 qualify vacuously, and so
    does every connected graph for k = 2.

    Raises:
        ParameterError: k < 2
        DisconnectedGraphError: g is disconnected
    """
    if k < 2:
        raise ParameterError(f"k < 2 (got k={k})")
    _require_connected(g)
    budget = budget or SearchBudget()

    if g.vertex_count <= 2 or k == 2:
        return DecisionResult(k=k, verdict=Verdict.TRUE, witness=bfs_tree(g).as_list())

    subproblems = [ROOT]
    if workers > 1:
        subproblems = split_frontier(g, workers * get_settings().split_factor)
    part_budget = budget.split(len(subproblems))

    parts = run_tasks(
        _decide_subproblem,
        [(g, k, sub, part_budget) for sub in subproblems],
        workers,
    )
    usage = merge_usage([usage for _, _, usage in parts], budget)

    for verdict, witness, _ in parts:
        if verdict == Verdict.TRUE:
            result = DecisionResult(k=k, verdict=Verdict.TRUE, witness=witness, usage=usage)
            break
    else:
        if any(verdict == Verdict.INDETERMINATE for verdict, _, _ in parts):
            result = DecisionResult(k=k, verdict=Verdict.INDETERMINATE, usage=usage)
        else:
            result = DecisionResult(k=k, verdict=Verdict.FALSE, usage=usage)

    logger.info(
        f"Decision k={k} on n={g.vertex_count}: {result.verdict.value} "
        f"after {usage.nodes_explored} nodes"
    )
    return result


def max_min_internal_degree(
    g: Graph,
    budget: Optional[SearchBudget] = None,
    workers: int = 1,
) -> MMIDResult:
    """
    Largest k such that some spanning tree has all internal degrees >= k.

    k ascends from 2 (always attained when n >= 3) and stops at the first
    FALSE or INDETERMINATE decision, or at the maximum degree. The value is
    None for n <= 2, where no tree has an internal vertex.

    Raises:
        EmptyGraphError: g has no vertices
        DisconnectedGraphError: g is disconnected
    """
    if g.vertex_count == 0:
        raise EmptyGraphError()
    _require_connected(g)
    budget = budget or SearchBudget()

    base = bfs_tree(g)
    if g.vertex_count <= 2:
        return MMIDResult(value=None, witness=base.as_list(), exhaustive=True)

    best_value = 2
    best_witness = base.as_list()
    decisions: list[DecisionResult] = []
    used_nodes, used_seconds = 0, 0.0
    exhaustive = True

    for k in range(3, max_degree(g) + 1):
        decision = exists_tree_all_internal_at_least(
            g, k, budget.remaining(used_nodes, used_seconds), workers
        )
        decisions.append(decision)
        used_nodes += decision.usage.nodes_explored
        used_seconds += decision.usage.elapsed_seconds

        if decision.verdict == Verdict.TRUE:
            best_value, best_witness = k, decision.witness or best_witness
            continue
        if decision.verdict == Verdict.INDETERMINATE:
            exhaustive = False
        break

    usage = BudgetUsage(
        nodes_explored=used_nodes,
        elapsed_seconds=round(used_seconds, 6),
        node_limit=budget.node_limit,
        time_limit=budget.time_limit,
        exhausted=next((d.usage.exhausted for d in decisions if d.usage.exhausted), None),
    )
    logger.info(f"Max-min internal degree = {best_value} (exhaustive={exhaustive})")
    return MMIDResult(
        value=best_value,
        witness=best_witness,
        exhaustive=exhaustive,
        decisions=decisions,
        usage=usage,
    )
