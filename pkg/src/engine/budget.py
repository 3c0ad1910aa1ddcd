# src/engine/budget.py

"""
Search Budget Tracker.

Responsible for counting search nodes and elapsed time against a
SearchBudget and signalling exhaustion to the solver that owns it.
"""

import time
from typing import Optional

from src.core.errors import BudgetExhausted
from src.models.inputs import SearchBudget
from src.models.outputs import BudgetUsage

# Default stride, in nodes, between wall-clock checks
CLOCK_INTERVAL = 1024


class BudgetTracker:
    """
    Tracks nodes explored and elapsed time for one search.
    """

    def __init__(self, budget: Optional[SearchBudget] = None, clock_interval: int = CLOCK_INTERVAL):
        """
        Start the clock with all usage metrics at zero.

        Searches with expensive nodes pass a small `clock_interval` so the
        deadline is noticed within a few nodes.
        """
        self.budget = budget or SearchBudget()
        self.nodes = 0
        self.started = time.monotonic()
        self.exhausted: Optional[str] = None
        self.clock_interval = max(1, clock_interval)
        self._deadline = (
            self.started + self.budget.time_limit if self.budget.time_limit is not None else None
        )

    def charge(self, nodes: int = 1) -> None:
        """
        Record `nodes` new search nodes.

        Raises:
            BudgetExhausted: when the node limit or the deadline has passed
        """
        self.nodes += nodes
        limit = self.budget.node_limit
        if limit is not None and self.nodes > limit:
            self.exhausted = "nodes"
            raise BudgetExhausted("nodes")
        if self._deadline is not None and self.nodes % self.clock_interval == 0:
            if time.monotonic() > self._deadline:
                self.exhausted = "time"
                raise BudgetExhausted("time")

    def elapsed(self) -> float:
        return time.monotonic() - self.started

    def get_usage(self) -> BudgetUsage:
        """
        Returns the consumed resources as a BudgetUsage model suitable for
        solver results and reports.
        """
        return BudgetUsage(
            nodes_explored=self.nodes,
            elapsed_seconds=round(self.elapsed(), 6),
            node_limit=self.budget.node_limit,
            time_limit=self.budget.time_limit,
            exhausted=self.exhausted,
        )


def merge_usage(parts: list[BudgetUsage], budget: SearchBudget) -> BudgetUsage:
    """Combine per-subproblem usage: nodes add, time is the maximum, any exhaustion wins."""
    exhausted = next((p.exhausted for p in parts if p.exhausted), None)
    return BudgetUsage(
        nodes_explored=sum(p.nodes_explored for p in parts),
        elapsed_seconds=max((p.elapsed_seconds for p in parts), default=0.0),
        node_limit=budget.node_limit,
        time_limit=budget.time_limit,
        exhausted=exhausted,
    )
