# src/constructions/__init__.py

"""
Deterministic graph builders: the counterexample family and the standard
families used as comparators and test corpus.
"""

from .counterexample import build_counterexample, expected_edge_count
from .families import (
    build_complete,
    build_cycle,
    build_path,
    build_random_connected,
    build_random_graph,
    build_random_regular,
    build_star,
)

__all__ = [
    "build_complete",
    "build_counterexample",
    "build_cycle",
    "build_path",
    "build_random_connected",
    "build_random_graph",
    "build_random_regular",
    "build_star",
    "expected_edge_count",
]
