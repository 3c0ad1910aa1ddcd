# src/engine/greedy.py

"""
Max-leaf greedy: a deterministic comparator for leaf-rich spanning trees.
No approximation guarantee is claimed.
"""

from src.core.errors import DisconnectedGraphError, EmptyGraphError
from src.core.graph import Edge, Graph
from src.engine.profile import profile_degrees
from src.engine.tree import SpanningTree
from src.models.outputs import MaxLeafResult
from src.utils.logger import get_logger

logger = get_logger("MaxLeafGreedy")


def max_leaf_greedy(g: Graph) -> MaxLeafResult:
    """
    Grow a tree from vertex 0: repeatedly take the tree vertex with the most
    unreached neighbours (ties: lowest id) and attach all of them.

    Raises:
        EmptyGraphError: g has no vertices
        DisconnectedGraphError: g is disconnected
    """
    n = g.vertex_count
    if n == 0:
        raise EmptyGraphError()

    reached = [False] * n
    reached[0] = True
    tree_vertices = [0]
    edges: list[Edge] = []

    while len(tree_vertices) < n:
        best, best_gain = -1, 0
        for v in sorted(tree_vertices):
            gain = sum(1 for w in g.adjacency(v) if not reached[w])
            if gain > best_gain:
                best, best_gain = v, gain
        if best_gain == 0:
            raise DisconnectedGraphError()
        for w in g.adjacency(best):
            if not reached[w]:
                reached[w] = True
                tree_vertices.append(w)
                edges.append(Edge.of(best, w))

    tree = SpanningTree(n, tuple(sorted(edges)))
    leaves = len(profile_degrees(tree.degrees()).leaves)
    logger.debug(f"Greedy tree on n={n}: {leaves} leaves")
    return MaxLeafResult(tree=tree.as_list(), leaf_count=leaves, vertex_count=n)
