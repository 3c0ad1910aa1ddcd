# src/core/__init__.py

"""
Graph core: the immutable Graph type, structural queries, exact counting
and interchange formats.
"""

from .counting import counterexample_tree_count, spanning_tree_count
from .formats import emit_dot, emit_graph6, parse_graph6, parse_graph6_lines
from .graph import (
    Edge,
    Graph,
    connected_components,
    find_bridges,
    is_connected,
    max_degree,
    min_degree,
)

__all__ = [
    "Edge",
    "Graph",
    "connected_components",
    "counterexample_tree_count",
    "emit_dot",
    "emit_graph6",
    "find_bridges",
    "is_connected",
    "max_degree",
    "min_degree",
    "parse_graph6",
    "parse_graph6_lines",
    "spanning_tree_count",
]
