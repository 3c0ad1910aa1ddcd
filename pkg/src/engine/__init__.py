# src/engine/__init__.py

from .certificate import certificate_check, check_labels
from .enumeration import count_by_enumeration, enumerate_spanning_trees, iter_spanning_trees
from .greedy import max_leaf_greedy
from .profile import internal_degree_key, tree_profile, validate_tree
from .sampling import sample_spanning_tree, sample_spanning_trees
from .search import exists_tree_all_internal_at_least, max_min_internal_degree
from .tree import SpanningTree, bfs_tree

__all__ = [
    "SpanningTree",
    "bfs_tree",
    "certificate_check",
    "check_labels",
    "count_by_enumeration",
    "enumerate_spanning_trees",
    "exists_tree_all_internal_at_least",
    "internal_degree_key",
    "iter_spanning_trees",
    "max_leaf_greedy",
    "max_min_internal_degree",
    "sample_spanning_tree",
    "sample_spanning_trees",
    "tree_profile",
    "validate_tree",
]
