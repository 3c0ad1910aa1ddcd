# src/core/counting.py

"""
Exact spanning-tree counting by the matrix-tree theorem.

The count equals any principal (n-1)x(n-1) minor of the graph Laplacian.
The determinant is taken with Bareiss' fraction-free elimination over
Python integers, so every intermediate value is an exact integer and the
result never passes through floating point.
"""

from src.core.graph import Graph, is_connected
from src.utils.logger import get_logger

logger = get_logger("Counting")


def laplacian(g: Graph) -> list[list[int]]:
    """Dense integer Laplacian D - A."""
    n = g.vertex_count
    matrix = [[0] * n for _ in range(n)]
    for v in g.vertices():
        matrix[v][v] = g.degree(v)
        for w in g.adjacency(v):
            matrix[v][w] = -1
    return matrix


def reduced_laplacian(g: Graph, removed: int = 0) -> list[list[int]]:
    """Laplacian with row and column `removed` deleted."""
    full = laplacian(g)
    return [
        [value for j, value in enumerate(row) if j != removed]
        for i, row in enumerate(full)
        if i != removed
    ]


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """
    Determinant of a square integer matrix by fraction-free elimination.

    Each update M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) / prev
    divides exactly, so the arithmetic stays in the integers.
    """
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")

    sign = 1
    previous = 1
    for k in range(n - 1):
        # look for a pivot in the current column; no pivot means det == 0
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0

        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // previous
            row_i[k] = 0
        previous = pivot

    return sign * m[n - 1][n - 1]


def spanning_tree_count(g: Graph) -> int:
    """
    Exact number of spanning trees of g.

    Disconnected graphs (and the empty graph, which has no (n-1)-edge tree)
    return 0; a single vertex has exactly one spanning tree.
    """
    n = g.vertex_count
    if n == 0:
        return 0
    if n == 1:
        return 1
    if not is_connected(g):
        return 0

    count = bareiss_determinant(reduced_laplacian(g))
    logger.debug(f"Matrix-tree count for n={n}, m={g.edge_count}: {count}")
    return count


def counterexample_tree_count(d: int, n: int) -> int:
    """
    Closed-form spanning-tree count of the counterexample graph.

    Product of the Cayley counts of the core clique, the d-1 pendant
    cliques and the tail clique; the connecting bridges contribute 1.
    """
    tail = n - (d - 1) * (d + 1) - d
    return cayley(d) * cayley(d + 1) ** (d - 1) * cayley(tail)


def cayley(m: int) -> int:
    """Spanning trees of the complete graph K_m (m^(m-2), with K_1 = 1)."""
    if m <= 0:
        return 0
    if m <= 2:
        return 1
    return m ** (m - 2)
