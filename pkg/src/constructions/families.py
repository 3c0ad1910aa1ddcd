# src/constructions/families.py

"""
Standard graph families used as comparators and test corpus.

All builders are pure functions of their arguments; the randomized ones
draw from a private random.Random(seed), so equal seeds give equal graphs.
"""

import random
from itertools import combinations
from typing import Optional

from config.settings import get_settings
from src.core.errors import ParameterError, RetryBudgetExceeded
from src.core.graph import Graph
from src.utils.logger import get_logger

logger = get_logger("Families")


def _require_positive(m: int, name: str) -> None:
    if m < 1:
        raise ParameterError(f"{name} needs m >= 1 (got m={m})")


def build_complete(m: int) -> Graph:
    """Complete graph K_m."""
    _require_positive(m, "complete graph")
    return Graph(m, combinations(range(m), 2))


def build_path(m: int) -> Graph:
    """Path P_m on m vertices."""
    _require_positive(m, "path")
    return Graph(m, [(i, i + 1) for i in range(m - 1)])


def build_cycle(m: int) -> Graph:
    """Cycle C_m; needs m >= 3."""
    if m < 3:
        raise ParameterError(f"cycle needs m >= 3 (got m={m})")
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


def build_star(leaves: int) -> Graph:
    """Star K_{1,leaves} centred at vertex 0."""
    _require_positive(leaves, "star")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def build_random_regular(d: int, m: int, seed: int, max_attempts: Optional[int] = None) -> Graph:
    """
    Simple d-regular graph on m vertices from the configuration model.

    Each attempt shuffles the d*m stubs and pairs them consecutively; an
    attempt that produces a loop or a repeated pair is discarded whole and
    the pairing is redrawn.

    Raises:
        ParameterError: d*m odd, d < 0, or m <= d
        RetryBudgetExceeded: no simple pairing within max_attempts
    """
    if d < 0:
        raise ParameterError(f"d must be nonnegative (got d={d})")
    if (d * m) % 2 != 0:
        raise ParameterError(f"dm odd (d={d}, m={m})")
    if m <= d:
        raise ParameterError(f"m <= d (d={d}, m={m}); need m > d")

    attempts = max_attempts if max_attempts is not None else get_settings().regular_max_attempts
    rng = random.Random(seed)
    stubs_template = [v for v in range(m) for _ in range(d)]

    for attempt in range(1, attempts + 1):
        stubs = list(stubs_template)
        rng.shuffle(stubs)
        edges: set[tuple[int, int]] = set()
        simple = True
        for s1, s2 in zip(stubs[::2], stubs[1::2]):
            if s1 > s2:
                s1, s2 = s2, s1
            if s1 == s2 or (s1, s2) in edges:
                simple = False
                break
            edges.add((s1, s2))
        if simple:
            logger.debug(f"Random {d}-regular graph on {m} vertices after {attempt} attempt(s)")
            return Graph(m, sorted(edges))

    raise RetryBudgetExceeded(
        f"no simple {d}-regular pairing on {m} vertices within {attempts} attempts"
    )


def build_random_graph(m: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(m, p) with a seeded generator."""
    _require_positive(m, "random graph")
    rng = random.Random(seed)
    return Graph(m, [pair for pair in combinations(range(m), 2) if rng.random() < p])


def build_random_connected(m: int, p: float, seed: int) -> Graph:
    """
    Random connected graph: a random labelled spanning tree (random parent
    for each vertex among the earlier ones) plus every other pair with
    probability p.
    """
    _require_positive(m, "random connected graph")
    rng = random.Random(seed)
    edges = {(rng.randrange(v), v) for v in range(1, m)}
    for pair in combinations(range(m), 2):
        if pair not in edges and rng.random() < p:
            edges.add(pair)
    return Graph(m, sorted(edges))
