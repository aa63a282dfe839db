"""Chunked execution helpers; numpy kernels release the GIL so threads help."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")


def default_threads() -> int:
    return os.cpu_count() or 1


def chunk_ranges(total: int, step: int) -> list[range]:
    step = max(1, step)
    return [range(s, min(s + step, total)) for s in range(0, total, step)]


def map_chunks(fn: Callable[[range], T], chunks: Iterable[range], threads: int = 1) -> list[T]:
    """Apply ``fn`` to each chunk, preserving chunk order in the result."""
    chunks = list(chunks)
    if threads < 1:
        raise ValueError("threads must be >= 1")
    if threads == 1 or len(chunks) < 2:
        return [fn(c) for c in chunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, chunks))


def first_hit(fn: Callable[[range], T | None], chunks: Iterable[range], threads: int = 1) -> T | None:
    """Return the result of the earliest chunk (by position) that reports a hit.

    Sequential runs stop at the first hit. Parallel runs evaluate every chunk
    and reduce to the earliest one, so the answer never depends on scheduling.
    """
    chunks = list(chunks)
    if threads == 1:
        for c in chunks:
            hit = fn(c)
            if hit is not None:
                return hit
        return None
    for hit in map_chunks(fn, chunks, threads):
        if hit is not None:
            return hit
    return None
