"""Worker-count resolution and an order-preserving parallel map."""

import os
from concurrent.futures import ThreadPoolExecutor

THREADS_ENV = "CITEFORENSICS_THREADS"


def worker_count(requested=None) -> int:
    """Explicit request, else ``$CITEFORENSICS_THREADS``, else 1; always >= 1."""
    if requested is None:
        env = os.environ.get(THREADS_ENV, "").strip()
        if env:
            try:
                requested = int(env)
            except ValueError:
                raise ValueError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
        else:
            requested = 1
    return max(1, int(requested))


def parallel_map(fn, items, workers=None):
    """``list(map(fn, items))``, optionally fanned out over threads; output order is input order."""
    items = list(items)
    n = worker_count(workers)
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
