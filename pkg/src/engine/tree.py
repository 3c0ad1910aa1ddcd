# src/engine/tree.py

"""
Spanning-tree value type and the union-find used by every tree search.
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from src.core.graph import Edge, Graph


@dataclass(frozen=True, slots=True)
class SpanningTree:
    """n-1 canonical edges, sorted; validity against a host is checked by tree_profile."""

    vertex_count: int
    edges: tuple[Edge, ...]

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "SpanningTree":
        return cls(vertex_count, tuple(sorted(Edge.of(a, b) for a, b in edges)))

    def as_list(self) -> list[tuple[int, int]]:
        """Plain (u, v) pairs for JSON reports."""
        return [tuple(edge) for edge in self.edges]

    def degrees(self) -> list[int]:
        degree = [0] * self.vertex_count
        for u, v in self.edges:
            degree[u] += 1
            degree[v] += 1
        return degree


def bfs_tree(g: Graph, root: int = 0) -> SpanningTree:
    """Breadth-first spanning tree of a connected graph from `root`."""
    if g.vertex_count == 0:
        return SpanningTree(0, ())
    seen = [False] * g.vertex_count
    seen[root] = True
    queue = deque([root])
    edges: list[Edge] = []
    while queue:
        v = queue.popleft()
        for w in g.adjacency(v):
            if not seen[w]:
                seen[w] = True
                edges.append(Edge.of(v, w))
                queue.append(w)
    return SpanningTree(g.vertex_count, tuple(sorted(edges)))


class RollbackUnionFind:
    """
    Union-find with union by size and no path compression, so that every
    union can be undone in LIFO order.
    """

    __slots__ = ("parent", "size", "_history")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self._history: list[int] = []

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of a and b; returns False (and records nothing) if already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self._history.append(rb)
        return True

    def rollback(self) -> None:
        """Undo the most recent successful union."""
        rb = self._history.pop()
        ra = self.parent[rb]
        self.parent[rb] = rb
        self.size[ra] -= self.size[rb]
