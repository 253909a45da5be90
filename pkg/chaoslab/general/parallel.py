"""Optional process pool for independent batches"""

from concurrent.futures import ProcessPoolExecutor
import os

import chaoslab.defaults as default
from chaoslab.errors import ArgumentError


def worker_count(**kwargs):
    '''
    Number of worker processes, read from the environment variable named in
    `chaoslab.defaults.threads_env`. Defaults to 1 (no pool).
    '''
    env = kwargs.get("environ", os.environ)
    value = env.get(default.threads_env, "1")
    try:
        workers = int(value)
    except ValueError:
        raise ArgumentError(f"{default.threads_env} must be an integer. You"\
                            f" provided '{value}'")
    if workers < 1:
        raise ArgumentError(f"{default.threads_env} must be at least 1")
    return workers


def parallel_map(func, items, **kwargs):
    '''
    Apply `func` to every item, preserving order.

    With a single worker this is a plain list comprehension. Otherwise items
    are spread over a process pool; results are still returned in input
    order, so the output never depends on the number of workers. `func` must
    be a module-level function.
    '''
    items = list(items)
    workers = kwargs.get("workers", None) or worker_count()
    if workers == 1 or len(items) < 2:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(func, items))
