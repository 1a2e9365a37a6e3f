import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar('T')
R = TypeVar('R')

THREADS_ENV = 'SNERVE_THREADS'


def thread_count() -> int:
    """
    Worker count read from the ``SNERVE_THREADS`` environment variable.

    Returns:
        int: The configured count, or 1 when unset or not a positive integer.
    """
    raw = os.environ.get(THREADS_ENV, '1')
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        warnings.warn('ignoring {}={!r}, running single-threaded'.format(THREADS_ENV, raw))
        return 1
    return value


def parallel_map(fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
    """
    Applies ``fn`` to every item, possibly on a thread pool.

    Results are returned in input order whatever the worker count, so callers
    that merge them get deterministic output.

    Args:
        fn (callable): A pure function of one argument.
        items (iterable): The independent work items.

    Returns:
        list: ``[fn(item) for item in items]``.
    """
    items = list(items)
    workers = thread_count()
    if workers == 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
