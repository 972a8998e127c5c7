import os
import sys
from multiprocessing import Pool
from typing import Callable, List, Optional, Sequence, TypeVar

from mmengine.utils import track_parallel_progress, track_progress

THREADS_ENV = 'MATNORM_DIAG_THREADS'

T = TypeVar('T')
R = TypeVar('R')


def resolve_workers(parallelism: Optional[int] = None) -> int:
    """Number of worker processes to use.

    ``parallelism`` wins when given; otherwise ``MATNORM_DIAG_THREADS`` or
    the CPU count. The environment variable also caps an explicit request.
    """
    if parallelism is not None and parallelism < 1:
        raise ValueError(
            f'parallelism should be at least 1, but got {parallelism}')
    cap = os.environ.get(THREADS_ENV)
    if cap is not None:
        try:
            cap = int(cap)
        except ValueError:
            raise ValueError(
                f'{THREADS_ENV} should be a positive integer, got {cap!r}')
        if cap < 1:
            raise ValueError(
                f'{THREADS_ENV} should be a positive integer, got {cap}')
    workers = parallelism or cap or os.cpu_count() or 1
    return min(workers, cap) if cap else workers


def ordered_map(func: Callable[[T], R],
                tasks: Sequence[T],
                parallelism: Optional[int] = None,
                progress: bool = False) -> List[R]:
    """Apply ``func`` to every task and return the results in task order.

    ``func`` must be a picklable module-level function when more than one
    worker is used. Every task carries its own random stream, so the
    results do not depend on the number of workers.
    """
    tasks = list(tasks)
    if not tasks:
        return []
    workers = min(resolve_workers(parallelism), len(tasks))
    if workers == 1:
        if progress:
            return track_progress(func, tasks, file=sys.stderr)
        return [func(task) for task in tasks]
    if progress:
        return track_parallel_progress(
            func, tasks, workers, keep_order=True, file=sys.stderr)
    with Pool(workers) as pool:
        return pool.map(func, tasks)
