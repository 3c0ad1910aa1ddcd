# src/core/graph.py

"""
Simple undirected graph on dense integer vertex ids 0..n-1.

The Graph is immutable after construction; every query below is read-only,
so instances can be shared between threads and pickled to worker processes.
"""

from collections import deque
from typing import Iterable, Iterator, NamedTuple, Optional

import networkx as nx

from src.core.errors import EmptyGraphError, GraphError


class Edge(NamedTuple):
    """Unordered vertex pair stored canonically as (min, max)."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        """Build the canonical edge between a and b."""
        if a == b:
            raise GraphError(f"self-loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)

    def other(self, x: int) -> int:
        """Return the endpoint that is not x."""
        return self.v if x == self.u else self.u


class Graph:
    """
    Immutable simple graph.

    Adjacency is stored as one sorted tuple of neighbours per vertex; the
    canonical edge list is sorted lexicographically and cached.
    """

    __slots__ = ("_adjacency", "_edges")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise GraphError(f"negative vertex count {vertex_count}")

        neighbours: list[set[int]] = [set() for _ in range(vertex_count)]
        canonical: set[Edge] = set()
        for a, b in edges:
            if not (0 <= a < vertex_count and 0 <= b < vertex_count):
                raise GraphError(f"edge ({a}, {b}) outside vertex range 0..{vertex_count - 1}")
            edge = Edge.of(a, b)
            if edge in canonical:
                raise GraphError(f"parallel edge {tuple(edge)}")
            canonical.add(edge)
            neighbours[a].add(b)
            neighbours[b].add(a)

        self._adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(adj)) for adj in neighbours
        )
        self._edges: tuple[Edge, ...] = tuple(sorted(canonical))

    # -------------------------------------------------------------------------
    # Construction helpers
    # -------------------------------------------------------------------------

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Convert a networkx graph whose nodes are exactly 0..n-1."""
        n = graph.number_of_nodes()
        if set(graph.nodes) != set(range(n)):
            raise GraphError("networkx graph nodes must be 0..n-1")
        return cls(n, graph.edges())

    def to_networkx(self) -> nx.Graph:
        """Return an equivalent networkx graph (used by flow solvers and oracles)."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self._edges)
        return graph

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        """Return a new graph with the extra edges added."""
        return Graph(self.vertex_count, list(self._edges) + [tuple(e) for e in extra])

    def without_edge(self, edge: tuple[int, int]) -> "Graph":
        """Return a new graph with one edge removed."""
        target = Edge.of(*edge)
        return Graph(self.vertex_count, [e for e in self._edges if e != target])

    # -------------------------------------------------------------------------
    # Queries
    # -------------------------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self._adjacency)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self.vertex_count)

    def edges(self) -> tuple[Edge, ...]:
        """Canonical edges in lexicographic (min, max) order."""
        return self._edges

    def adjacency(self, v: int) -> tuple[int, ...]:
        """Sorted neighbours of v."""
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def degrees(self) -> list[int]:
        return [len(adj) for adj in self._adjacency]

    def has_edge(self, a: int, b: int) -> bool:
        if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count) or a == b:
            return False
        # Probe the shorter list
        if len(self._adjacency[a]) > len(self._adjacency[b]):
            a, b = b, a
        return b in self._adjacency[a]

    # -------------------------------------------------------------------------
    # Dunder
    # -------------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adjacency == other._adjacency

    def __hash__(self) -> int:
        return hash(self._adjacency)

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self.vertex_count}, edge_count={self.edge_count})"

    def __getstate__(self):
        return (self.vertex_count, self._edges)

    def __setstate__(self, state) -> None:
        vertex_count, edges = state
        rebuilt = Graph(vertex_count, edges)
        self._adjacency = rebuilt._adjacency
        self._edges = rebuilt._edges


# =============================================================================
# Structural queries
# =============================================================================


def min_degree(g: Graph) -> int:
    """Minimum vertex degree; raises EmptyGraphError on a graph with no vertices."""
    if g.vertex_count == 0:
        raise EmptyGraphError()
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    """Maximum vertex degree (0 for the empty graph)."""
    return max(g.degrees(), default=0)


def _reachable_from(g: Graph, source: int, skip: Optional[Edge] = None) -> list[bool]:
    seen = [False] * g.vertex_count
    seen[source] = True
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.adjacency(v):
            if seen[w]:
                continue
            if skip is not None and Edge.of(v, w) == skip:
                continue
            seen[w] = True
            queue.append(w)
    return seen


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (the empty graph counts as connected)."""
    if g.vertex_count == 0:
        return True
    return all(_reachable_from(g, 0))


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by smallest vertex."""
    component = [-1] * g.vertex_count
    result: list[list[int]] = []
    for root in g.vertices():
        if component[root] != -1:
            continue
        members = [root]
        component[root] = len(result)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.adjacency(v):
                if component[w] == -1:
                    component[w] = len(result)
                    members.append(w)
                    queue.append(w)
        result.append(sorted(members))
    return result


def find_bridges(g: Graph) -> frozenset[Edge]:
    """
    Cut edges of g by the low-link method.

    An iterative depth-first search assigns discovery times; a tree edge
    (parent, v) is a bridge exactly when no back edge from v's subtree
    reaches parent or above, i.e. low[v] > disc[parent].
    """
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    bridges: set[Edge] = set()
    timer = 0

    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(g.adjacency(root)))]

        while stack:
            v, parent, neighbours = stack[-1]
            descended = False
            for w in neighbours:
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.adjacency(w))))
                    descended = True
                    break
                low[v] = min(low[v], disc[w])
            if descended:
                continue

            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridges.add(Edge.of(parent, v))

    return frozenset(bridges)


def brute_force_bridges(g: Graph) -> frozenset[Edge]:
    """Edges whose deletion disconnects their endpoints; quadratic reference for find_bridges."""
    return frozenset(
        edge for edge in g.edges() if not _reachable_from(g, edge.u, skip=edge)[edge.v]
    )
