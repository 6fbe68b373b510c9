"""
Worker pool for independent sub-tasks.

Results always come back in input order, so a run with --jobs 4 renders the
same bytes as a single-threaded run.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def run_parallel(fn: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> List[R]:
    """
    Map fn over items, in a thread pool when jobs > 1.

    Args:
        fn: Pure function of one item
        items: Work items
        jobs: Worker count; 1 runs inline

    Returns:
        Results in the order of items
    """
    work = list(items)
    if jobs <= 1 or len(work) <= 1:
        return [fn(item) for item in work]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, work))
