"""Map-reduce over a stream of work items, optionally across worker processes."""

from __future__ import annotations

import multiprocessing as mp
import os
from functools import reduce
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def default_jobs() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def reduce_stream(items: Iterable[T], map_fn: Callable[[T], R], merge: Callable[[R, R], R],
                  jobs: int = 1, chunksize: int = 64) -> R | None:
    """``reduce(merge, map(map_fn, items))``; ``merge`` must be associative and
    commutative because workers return results in any order. ``map_fn`` must be
    picklable when ``jobs > 1``.
    """
    if jobs <= 1:
        return reduce(merge, map(map_fn, items), None)
    with mp.get_context("fork").Pool(jobs) as pool:
        return reduce(merge, pool.imap_unordered(map_fn, items, chunksize=chunksize), None)
