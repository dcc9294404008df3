"""Runtime limits for the exponential enumerations.

The vertex capacity defaults to 26 and may be raised or lowered with the
``DOMPOLY_MAX_N`` environment variable or :func:`override`.
"""
from __future__ import annotations

import os
from contextlib import contextmanager

from .errors import CapacityError

DEFAULT_MAX_VERTICES = 26
# Bitsets are stored in uint64 words and graph6 stops at 62 vertices.
HARD_MAX_VERTICES = 62

EDGE_SUBSET_CAP = 20
LEMMA_CAP = 16
BLOCK_BITS = 16

_overrides: dict[str, int] = {}


def max_vertices() -> int:
    if "max_vertices" in _overrides:
        return _overrides["max_vertices"]
    raw = os.environ.get("DOMPOLY_MAX_N")
    if raw is None:
        return DEFAULT_MAX_VERTICES
    try:
        value = int(raw)
    except ValueError:
        raise CapacityError(f"DOMPOLY_MAX_N must be an integer, got {raw!r}") from None
    if not 0 <= value <= HARD_MAX_VERTICES:
        raise CapacityError(f"DOMPOLY_MAX_N must lie in 0..{HARD_MAX_VERTICES}")
    return value


def edge_subset_cap() -> int:
    return _overrides.get("edge_subset_cap", EDGE_SUBSET_CAP)


def lemma_cap() -> int:
    return _overrides.get("lemma_cap", LEMMA_CAP)


def block_bits() -> int:
    return _overrides.get("block_bits", BLOCK_BITS)


@contextmanager
def override(**limits: int):
    """Temporarily replace limits, e.g. ``override(max_vertices=30, block_bits=6)``."""
    known = {"max_vertices", "edge_subset_cap", "lemma_cap", "block_bits"}
    unknown = set(limits) - known
    if unknown:
        raise TypeError(f"unknown limits: {sorted(unknown)}")
    if limits.get("max_vertices", 0) > HARD_MAX_VERTICES:
        raise CapacityError(f"vertex capacity cannot exceed {HARD_MAX_VERTICES}")
    saved = dict(_overrides)
    _overrides.update(limits)
    try:
        yield
    finally:
        _overrides.clear()
        _overrides.update(saved)


def check_vertices(n: int) -> None:
    cap = max_vertices()
    if n > cap:
        raise CapacityError(f"graph has {n} vertices, capacity is {cap}")
