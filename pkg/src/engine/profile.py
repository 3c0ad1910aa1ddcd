# src/engine/profile.py

"""
Validation and degree profiling of spanning trees.
"""

from typing import Optional

from src.core.errors import TreeValidationError
from src.core.graph import Graph
from src.engine.tree import RollbackUnionFind, SpanningTree
from src.models.outputs import TreeProfile


def validate_tree(g: Graph, t: SpanningTree) -> None:
    """
    Check that t is a spanning tree of g.

    Raises:
        TreeValidationError: wrong vertex count, wrong edge count, an edge
            absent from g, or a cycle (n-1 acyclic edges are spanning)
    """
    n = g.vertex_count
    if t.vertex_count != n:
        raise TreeValidationError(f"tree has {t.vertex_count} vertices, graph has {n}")
    expected = max(n - 1, 0)
    if len(t.edges) != expected:
        raise TreeValidationError(f"tree has {len(t.edges)} edges, expected {expected}")

    dsu = RollbackUnionFind(n)
    for u, v in t.edges:
        if not g.has_edge(u, v):
            raise TreeValidationError(f"edge ({u}, {v}) is not in the graph")
        if not dsu.union(u, v):
            raise TreeValidationError(f"edge ({u}, {v}) closes a cycle")


def profile_degrees(tree_degree: list[int]) -> TreeProfile:
    """Build the profile from a degree vector without validating the tree."""
    leaves = tuple(v for v, deg in enumerate(tree_degree) if deg == 1)
    internals = tuple(v for v, deg in enumerate(tree_degree) if deg >= 2)
    min_internal: Optional[int] = min((tree_degree[v] for v in internals), default=None)
    return TreeProfile(
        tree_degree=tuple(tree_degree),
        leaves=leaves,
        internals=internals,
        min_internal_degree=min_internal,
    )


def tree_profile(g: Graph, t: SpanningTree) -> TreeProfile:
    """
    Degree tally of t: leaves, internal vertices and the minimum internal
    degree (None when t has no internal vertex, i.e. n <= 2).
    """
    validate_tree(g, t)
    return profile_degrees(t.degrees())


def internal_degree_key(value: Optional[int]) -> float:
    """Order key treating "no internal vertex" as +infinity."""
    return float("inf") if value is None else float(value)
