"""Vectorised sweeps over all ``2^n`` vertex subsets.

The subset space is cut into blocks: the low ``b`` vertices vary inside a
block (a numpy array of ``2^b`` masks) and the remaining high vertices are
fixed per block. Every sweep returns an integer histogram that is summed
over blocks, so the result does not depend on how blocks are scheduled.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from . import config
from .graph import Graph

U64 = np.uint64


@lru_cache(maxsize=8)
def _low_masks(bits: int) -> tuple[np.ndarray, np.ndarray]:
    masks = np.arange(1 << bits, dtype=U64)
    return masks, np.bitwise_count(masks).astype(np.int64)


def and_table(rows: Sequence[int], init: int) -> np.ndarray:
    """``T[s] = init & AND(rows[i] for bit i in s)`` for every ``s``."""
    table = np.empty(1 << len(rows), dtype=U64)
    table[0] = init
    for i, row in enumerate(rows):
        half = 1 << i
        np.bitwise_and(table[:half], U64(row), out=table[half:2 * half])
    return table


def or_table(rows: Sequence[int]) -> np.ndarray:
    """``T[s] = OR(rows[i] for bit i in s)`` for every ``s``."""
    table = np.empty(1 << len(rows), dtype=U64)
    table[0] = 0
    for i, row in enumerate(rows):
        half = 1 << i
        np.bitwise_or(table[:half], U64(row), out=table[half:2 * half])
    return table


def split(n: int) -> tuple[int, int]:
    """Return ``(low_bits, block_count)`` for an ``n``-vertex sweep."""
    low = min(n, config.block_bits())
    return low, 1 << (n - low)


def sweep(n: int, block_fn: Callable[[int], np.ndarray], workers: int = 1) -> np.ndarray:
    """Sum ``block_fn(hi)`` over all blocks, optionally on a thread pool."""
    _, count = split(n)
    if workers <= 1 or count == 1:
        results = map(block_fn, range(count))
        total = next(results)
        for r in results:
            total = total + r
        return total
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(block_fn, range(count)))
    total = results[0]
    for r in results[1:]:
        total = total + r
    return total


def dominating_size_histogram(g: Graph, workers: int = 1) -> np.ndarray:
    """``hist[k]`` = number of dominating sets of size ``k``."""
    n = g.n
    low, _ = split(n)
    closed = [row | (1 << v) for v, row in enumerate(g.adj)]
    low_or = or_table(closed[:low])
    high_or = or_table(closed[low:])
    _, low_pc = _low_masks(low)
    full = U64(g.full)

    def block(hi: int) -> np.ndarray:
        union = low_or | high_or[hi]
        hit = union == full
        return np.bincount(low_pc[hit] + hi.bit_count(), minlength=n + 1)

    return sweep(n, block, workers)


def complex_size_histogram(g: Graph, workers: int = 1) -> np.ndarray:
    """``hist[k]`` = number of ``k``-sets contained in some open neighborhood."""
    n = g.n
    low, _ = split(n)
    low_masks, low_pc = _low_masks(low)
    # Rows with the same neighborhood only need testing once.
    rows = sorted(set(g.adj))

    def block(hi: int) -> np.ndarray:
        masks = low_masks | U64(hi << low)
        inside = np.zeros(masks.shape, dtype=bool)
        for row in rows:
            inside |= (masks & U64(~row & g.full)) == 0
        return np.bincount(low_pc[inside] + hi.bit_count(), minlength=n + 1)

    if n == 0:
        return np.zeros(1, dtype=np.int64)
    return sweep(n, block, workers)


def intersection_profile(g: Graph, workers: int = 1) -> np.ndarray:
    """``H[s, c]`` = number of ``s``-sets ``W`` whose open neighborhoods
    intersect in exactly ``c`` vertices (``W = {}`` counts at ``c = n``)."""
    n = g.n
    low, _ = split(n)
    low_and = and_table(g.adj[:low], g.full)
    high_and = and_table(g.adj[low:], g.full)
    _, low_pc = _low_masks(low)
    width = n + 1

    def block(hi: int) -> np.ndarray:
        common = np.bitwise_count(low_and & high_and[hi]).astype(np.int64)
        key = (low_pc + hi.bit_count()) * width + common
        return np.bincount(key, minlength=width * width)

    return sweep(n, block, workers).reshape(width, width)


def parity_profile(g: Graph, workers: int = 1) -> np.ndarray:
    """``P[e, c]`` = number of nonempty ``W`` with ``|W| % 2 == e`` whose
    common open neighborhood has ``c`` vertices."""
    n = g.n
    low, _ = split(n)
    low_and = and_table(g.adj[:low], g.full)
    high_and = and_table(g.adj[low:], g.full)
    _, low_pc = _low_masks(low)
    width = n + 1

    def block(hi: int) -> np.ndarray:
        common = np.bitwise_count(low_and & high_and[hi]).astype(np.int64)
        parity = (low_pc + hi.bit_count()) & 1
        counts = np.bincount(parity * width + common, minlength=2 * width)
        if hi == 0:
            counts[n] -= 1  # drop W = {}
        return counts

    return sweep(n, block, workers).reshape(2, width)
