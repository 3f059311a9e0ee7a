# trigonal/core/parallel.py
"""
Data-parallel map used by family sweeps, discriminant grids and the
simple-dessin counter.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from trigonal.core.config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> List[R]:
    """Map fn over items, preserving order. fn must be picklable for workers > 1."""
    items = list(items)
    workers = settings.WORKERS if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    logger.debug(f"Mapping {len(items)} items over {workers} workers")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
