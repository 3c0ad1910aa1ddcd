# src/engine/certificate.py

"""
Certificate checker: replays, on one concrete spanning tree, the argument
that forces an internal vertex of degree 2 in the counterexample graph.
"""

from itertools import combinations

from src.core.errors import LabelMismatchError
from src.core.graph import Edge, Graph
from src.engine.profile import validate_tree
from src.engine.tree import RollbackUnionFind, SpanningTree
from src.models.outputs import CertificateReport
from src.models.roles import RoleLabels


def check_labels(g: Graph, labels: RoleLabels) -> None:
    if labels.vertex_count != g.vertex_count:
        raise LabelMismatchError(
            f"labels describe {labels.vertex_count} vertices, graph has {g.vertex_count}"
        )
    for u, z in labels.anchor_edges():
        if not g.has_edge(u, z):
            raise LabelMismatchError(f"anchor edge ({u}, {z}) is not in the graph")
    for u, v in combinations(labels.core_vertices(), 2):
        if not g.has_edge(u, v):
            raise LabelMismatchError(f"core vertices {u} and {v} are not adjacent")


def certificate_check(g: Graph, labels: RoleLabels, t: SpanningTree) -> CertificateReport:
    """
    Check, in order:
    1. every anchor edge (u, z_u) is in t;
    2. every core vertex has tree degree >= 2;
    3. t restricted to the core clique K is connected and acyclic;
    4. the lowest-id leaf of that subtree has tree degree exactly 2 in t.

    All four outcomes are reported even when an earlier one fails.

    Raises:
        LabelMismatchError: labels do not describe g
        TreeValidationError: t is not a spanning tree of g
    """
    check_labels(g, labels)
    validate_tree(g, t)

    tree_edges = set(t.edges)
    degree = t.degrees()
    core = labels.core_vertices()
    core_set = set(core)

    forced = all(Edge(u, z) in tree_edges for u, z in labels.anchor_edges())
    core_internal = all(degree[u] >= 2 for u in core)

    induced = [edge for edge in t.edges if edge.u in core_set and edge.v in core_set]
    dsu = RollbackUnionFind(g.vertex_count)
    acyclic = all(dsu.union(u, v) for u, v in induced)
    induced_is_tree = acyclic and len(induced) == len(core) - 1

    witness_leaf = witness_degree = None
    witness_internal = False
    if induced_is_tree:
        induced_degree = {u: 0 for u in core}
        for u, v in induced:
            induced_degree[u] += 1
            induced_degree[v] += 1
        # d >= 2, so T[K] has at least one edge and two leaves
        witness_leaf = min(u for u in core if induced_degree[u] == 1)
        witness_degree = degree[witness_leaf]
        witness_internal = witness_degree >= 2

    return CertificateReport(
        forced_bridges_present=forced,
        core_vertices_internal=core_internal,
        induced_core_edges=[tuple(edge) for edge in induced],
        induced_core_is_tree=induced_is_tree,
        witness_leaf=witness_leaf,
        witness_degree=witness_degree,
        witness_is_internal=witness_internal,
    )
