# src/engine/sampling.py

"""
Uniform random spanning trees by loop-erased random walks (Wilson's
algorithm). Used to draw certificate samples on graphs too large to
enumerate.
"""

import random
from typing import Optional

from src.core.errors import DisconnectedGraphError, EmptyGraphError
from src.core.graph import Edge, Graph, is_connected
from src.engine.tree import SpanningTree


def sample_spanning_tree(g: Graph, rng: random.Random, root: int = 0) -> SpanningTree:
    """
    Draw one spanning tree of g uniformly at random.

    Raises:
        EmptyGraphError: g has no vertices
        DisconnectedGraphError: g is disconnected
    """
    n = g.vertex_count
    if n == 0:
        raise EmptyGraphError()
    if not is_connected(g):
        raise DisconnectedGraphError()

    in_tree = [False] * n
    successor: list[Optional[int]] = [None] * n
    in_tree[root] = True

    for start in range(n):
        v = start
        while not in_tree[v]:
            successor[v] = rng.choice(g.adjacency(v))
            v = successor[v]
        # retrace the walk; overwritten successors have already erased the loops
        v = start
        while not in_tree[v]:
            in_tree[v] = True
            v = successor[v]

    edges = tuple(sorted(Edge.of(v, successor[v]) for v in range(n) if v != root))
    return SpanningTree(n, edges)


def sample_spanning_trees(g: Graph, count: int, seed: int = 0) -> list[SpanningTree]:
    """`count` independent uniform trees from a seeded generator (reproducible)."""
    rng = random.Random(seed)
    return [sample_spanning_tree(g, rng) for _ in range(count)]
