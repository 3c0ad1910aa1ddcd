# src/engine/parallel.py

"""
Process-pool execution of independent search subproblems.

The host graph is immutable and pickled once per task; results come back
in submission order, so merges are independent of scheduling.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Sequence, TypeVar

from src.utils.logger import get_logger

logger = get_logger("Parallel")

T = TypeVar("T")


def run_tasks(task: Callable[..., T], argument_sets: Sequence[tuple[Any, ...]], workers: int) -> list[T]:
    """
    Call `task(*args)` for every argument tuple and return results in order.

    With one worker (or one task) everything runs inline in this process;
    otherwise `task` and its arguments must be picklable.
    """
    if workers <= 1 or len(argument_sets) <= 1:
        return [task(*args) for args in argument_sets]

    logger.info(f"Dispatching {len(argument_sets)} subproblems to {workers} worker processes")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(task, *args) for args in argument_sets]
        return [future.result() for future in futures]
