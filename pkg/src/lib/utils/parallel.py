"""Ordered parallel map capped by SURPLUS_LAB_THREADS."""

from concurrent.futures import ThreadPoolExecutor

from .settings import get_settings


def ordered_map(func, items, max_workers=None):
    """
    Apply func to every item, in parallel, returning results in input order.

    Args:
        func: Callable taking one item
        items: Iterable of inputs
        max_workers: Thread cap; defaults to the configured SURPLUS_LAB_THREADS

    Returns:
        list: func(item) for each item, in the order of items
    """
    items = list(items)
    workers = max_workers or get_settings().threads
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(func, items))


def chunk_ranges(total, chunks):
    """Split range(total) into at most `chunks` contiguous (start, stop) pairs."""
    chunks = max(1, min(chunks, total))
    size, extra = divmod(total, chunks)
    ranges = []
    start = 0
    for index in range(chunks):
        stop = start + size + (1 if index < extra else 0)
        if stop > start:
            ranges.append((start, stop))
        start = stop
    return ranges
