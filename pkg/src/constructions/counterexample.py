# src/constructions/counterexample.py

"""
Builder for the minimum-degree-d graph in which every spanning tree has an
internal vertex of degree 2.

Layout (vertex ids, all blocks contiguous):
- 0..d-1: the core clique K; vertex 0 is the hub x, vertex i is y_i.
- pendant clique K_{y_i} (d+1 vertices) starts at d + (i-1)(d+1); its first
  vertex is the anchor z_{y_i}, joined to y_i by a bridge.
- the tail clique W fills the last w = n - (d-1)(d+1) - d vertices; its first
  vertex is the anchor z_x, joined to the hub by a bridge.
"""

from itertools import combinations

from src.core.graph import Graph
from src.models.inputs import CounterexampleParams
from src.models.roles import Role, RoleLabels
from src.utils.logger import get_logger

logger = get_logger("Counterexample")


def _clique(start: int, size: int) -> list[tuple[int, int]]:
    return list(combinations(range(start, start + size), 2))


def pendant_start(d: int, i: int) -> int:
    """First vertex (the anchor) of the pendant clique hanging from core vertex i >= 1."""
    return d + (i - 1) * (d + 1)


def tail_start(d: int) -> int:
    """First vertex (the anchor) of the tail clique."""
    return d + (d - 1) * (d + 1)


def build_counterexample(params: CounterexampleParams) -> tuple[Graph, RoleLabels]:
    """
    Build the counterexample graph and its role labels.

    The result is connected, has minimum degree exactly d, every core vertex
    has degree exactly d, and |E| = C(d,2) + (d-1)C(d+1,2) + C(w,2) + d.
    """
    d, n, w = params.d, params.n, params.tail_size

    roles: list[Role] = [Role.CORE_HUB] + [Role.CORE] * (d - 1)
    owner: list[int] = list(range(d))
    edges = _clique(0, d)

    for i in range(1, d):
        start = pendant_start(d, i)
        edges += _clique(start, d + 1)
        edges.append((i, start))
        roles += [Role.PENDANT_ANCHOR] + [Role.PENDANT_BODY] * d
        owner += [i] * (d + 1)

    start = tail_start(d)
    edges += _clique(start, w)
    edges.append((0, start))
    roles += [Role.TAIL_ANCHOR] + [Role.TAIL_BODY] * (w - 1)
    owner += [0] * w

    graph = Graph(n, edges)
    labels = RoleLabels(d=d, roles=tuple(roles), owner=tuple(owner))
    logger.info(f"Built counterexample d={d}, n={n}: {graph.edge_count} edges, tail size {w}")
    return graph, labels


def expected_edge_count(params: CounterexampleParams) -> int:
    """C(d,2) + (d-1)·C(d+1,2) + C(w,2) + d."""
    d, w = params.d, params.tail_size
    return d * (d - 1) // 2 + (d - 1) * (d + 1) * d // 2 + w * (w - 1) // 2 + d
