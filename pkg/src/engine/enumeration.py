# src/engine/enumeration.py

"""
Spanning-tree enumeration by include/exclude backtracking.

The walk never excludes a bridge of the remaining graph and never includes
a cycle-closing edge, so every branch ends in a distinct spanning tree and
the running time is proportional to the number of trees.
"""

import sys
from typing import Callable, Iterator, Optional

from config.settings import get_settings
from src.core.errors import BudgetExhausted, DisconnectedGraphError
from src.core.graph import Graph, is_connected
from src.engine.branching import ROOT, EdgeBranching, Subproblem, split_frontier
from src.engine.budget import BudgetTracker, merge_usage
from src.engine.parallel import run_tasks
from src.engine.tree import SpanningTree
from src.models.inputs import SearchBudget
from src.models.outputs import EnumerationSummary
from src.utils.logger import get_logger

logger = get_logger("Enumeration")

# Return False to stop the enumeration; None or True continues.
TreeVisitor = Callable[[SpanningTree], Optional[bool]]


class _TreeWalk(EdgeBranching):
    def __init__(self, graph: Graph, start: Subproblem, tracker: BudgetTracker):
        super().__init__(graph, start)
        self.tracker = tracker

    def trees(self) -> Iterator[SpanningTree]:
        if self.n == 0:
            return
        yield from self._walk(self.start.index)

    def _walk(self, i: int) -> Iterator[SpanningTree]:
        self.tracker.charge()
        if self.tree_complete():
            yield self.current_tree()
            return

        # cycle-closing edges are excluded without branching
        while i < self.m and self.forms_cycle(i):
            i += 1
        if i == self.m:
            return

        self.include(i)
        yield from self._walk(i + 1)
        self.undo_include()

        if not self.is_bridge_of_remaining(i):
            yield from self._walk(i + 1)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError()


def _ensure_recursion_depth(g: Graph) -> None:
    needed = 2 * g.edge_count + 200
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)


def iter_spanning_trees(
    g: Graph,
    budget: Optional[SearchBudget] = None,
    start: Subproblem = ROOT,
) -> Iterator[SpanningTree]:
    """
    Yield every spanning tree of g exactly once, in include-first canonical order.

    Raises:
        DisconnectedGraphError: before yielding anything if g is disconnected
        BudgetExhausted: if the budget runs out mid-stream
    """
    _require_connected(g)
    _ensure_recursion_depth(g)
    walk = _TreeWalk(g, start, BudgetTracker(budget))
    return walk.trees()


def _enumerate_subproblem(
    g: Graph,
    sub: Subproblem,
    visitor: Optional[TreeVisitor],
    budget: Optional[SearchBudget],
) -> EnumerationSummary:
    _ensure_recursion_depth(g)
    tracker = BudgetTracker(budget)
    walk = _TreeWalk(g, sub, tracker)
    trees = 0
    try:
        for tree in walk.trees():
            trees += 1
            if visitor is not None and visitor(tree) is False:
                return EnumerationSummary(
                    trees=trees,
                    completed=False,
                    stopped=True,
                    stop_witness=tree.as_list(),
                    usage=tracker.get_usage(),
                )
    except BudgetExhausted as exc:
        logger.warning(f"Enumeration stopped after {trees} trees: {exc}")
        return EnumerationSummary(trees=trees, completed=False, usage=tracker.get_usage())
    return EnumerationSummary(trees=trees, completed=True, usage=tracker.get_usage())


def enumerate_spanning_trees(
    g: Graph,
    visitor: Optional[TreeVisitor] = None,
    budget: Optional[SearchBudget] = None,
    workers: int = 1,
) -> EnumerationSummary:
    """
    Visit every spanning tree of g and summarise the run.

    The visitor sees each tree once; returning False stops the enumeration
    (in parallel mode it stops the subproblem that produced the tree). With
    workers > 1 the visitor must be picklable and its side effects stay in
    the worker processes; the summary is still exact.

    Raises:
        DisconnectedGraphError: if g is disconnected
    """
    _require_connected(g)
    budget = budget or SearchBudget()

    subproblems = [ROOT]
    if workers > 1:
        subproblems = split_frontier(g, workers * get_settings().split_factor)
    part_budget = budget.split(len(subproblems))

    logger.info(
        f"Enumerating spanning trees: n={g.vertex_count}, m={g.edge_count}, "
        f"{len(subproblems)} subproblem(s), {workers} worker(s)"
    )
    parts = run_tasks(
        _enumerate_subproblem,
        [(g, sub, visitor, part_budget) for sub in subproblems],
        workers,
    )

    stopped = any(part.stopped for part in parts)
    summary = EnumerationSummary(
        trees=sum(part.trees for part in parts),
        completed=all(part.completed for part in parts),
        stopped=stopped,
        stop_witness=next((p.stop_witness for p in parts if p.stop_witness is not None), None),
        usage=merge_usage([part.usage for part in parts], budget),
    )
    logger.info(f"Enumeration finished: {summary.trees} trees, completed={summary.completed}")
    return summary


def count_by_enumeration(g: Graph, workers: int = 1) -> int:
    """Number of spanning trees found by full enumeration (oracle for the determinant)."""
    return enumerate_spanning_trees(g, workers=workers).trees
