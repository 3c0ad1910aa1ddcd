# src/engine/branching.py

"""
Include/exclude branching over the canonical edge order.

Every spanning-tree search walks the edges in (min, max) lexicographic
order and decides each one:
- an edge whose endpoints are already joined by included edges is excluded;
- an edge may be excluded only if it is not a bridge of the remaining graph
  (included edges plus undecided ones), so the remaining graph stays
  connected and every leaf of the walk is a spanning tree;
- the include branch is explored first.

A Subproblem records a prefix of that walk so the decision tree can be cut
into independent pieces for worker processes.
"""

from collections import deque
from dataclasses import dataclass

from src.core.graph import Graph
from src.engine.tree import RollbackUnionFind, SpanningTree


@dataclass(frozen=True, slots=True)
class Subproblem:
    """Edges before `index` are decided; `chosen` lists the included ones."""

    index: int = 0
    chosen: tuple[int, ...] = ()
    # 0 = include, 1 = exclude at each genuine branch; sorts in walk order
    path: tuple[int, ...] = ()


ROOT = Subproblem()


class EdgeBranching:
    """Shared state of an include/exclude walk: the edge list and a rollback union-find."""

    def __init__(self, graph: Graph, start: Subproblem = ROOT):
        self.graph = graph
        self.n = graph.vertex_count
        self.edges = graph.edges()
        self.m = len(self.edges)
        self.start = start
        self.dsu = RollbackUnionFind(self.n)
        self.chosen: list[int] = []
        for idx in start.chosen:
            self.include(idx)

    def include(self, i: int) -> None:
        u, v = self.edges[i]
        self.dsu.union(u, v)
        self.chosen.append(i)

    def undo_include(self) -> None:
        self.chosen.pop()
        self.dsu.rollback()

    def tree_complete(self) -> bool:
        return len(self.chosen) == self.n - 1

    def forms_cycle(self, i: int) -> bool:
        u, v = self.edges[i]
        return self.dsu.find(u) == self.dsu.find(v)

    def is_bridge_of_remaining(self, i: int) -> bool:
        """
        True when excluding edge i would disconnect the remaining graph.

        Components of the included edges are contracted; the search looks
        for another route between the endpoints' components using only the
        undecided edges after i.
        """
        u, v = self.edges[i]
        find = self.dsu.find
        source, target = find(u), find(v)
        if source == target:
            return False

        contracted: dict[int, list[int]] = {}
        for j in range(i + 1, self.m):
            a, b = self.edges[j]
            ra, rb = find(a), find(b)
            if ra != rb:
                contracted.setdefault(ra, []).append(rb)
                contracted.setdefault(rb, []).append(ra)

        seen = {source}
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in contracted.get(x, ()):
                if y == target:
                    return False
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return True

    def current_tree(self) -> SpanningTree:
        return SpanningTree(self.n, tuple(sorted(self.edges[j] for j in self.chosen)))


def _expand(graph: Graph, sub: Subproblem) -> list[Subproblem]:
    """
    Advance through forced decisions until the next genuine branch.

    Returns the include and exclude children, or [] when the walk from
    `sub` reaches a complete tree without branching.
    """
    walk = EdgeBranching(graph, sub)
    i = sub.index
    chosen = list(sub.chosen)
    while not walk.tree_complete() and i < walk.m:
        if walk.forms_cycle(i):
            i += 1
            continue
        if walk.is_bridge_of_remaining(i):
            walk.include(i)
            chosen.append(i)
            i += 1
            continue
        return [
            Subproblem(i + 1, tuple(chosen) + (i,), sub.path + (0,)),
            Subproblem(i + 1, tuple(chosen), sub.path + (1,)),
        ]
    return []


def split_frontier(graph: Graph, target: int) -> list[Subproblem]:
    """
    Cut the decision tree into at least `target` subproblems when possible.

    The result is sorted in walk order (include before exclude), so merging
    per-subproblem results in list order reproduces the single-worker order.
    """
    if graph.vertex_count <= 1 or target <= 1:
        return [ROOT]

    frontier = deque([ROOT])
    settled: list[Subproblem] = []
    while frontier and len(frontier) + len(settled) < target:
        sub = frontier.popleft()
        children = _expand(graph, sub)
        if children:
            frontier.extend(children)
        else:
            settled.append(sub)

    return sorted(settled + list(frontier), key=lambda s: s.path)
