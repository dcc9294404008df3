"""Dominating sets and the domination polynomial."""
from __future__ import annotations

from . import config
from ._enum import dominating_size_histogram
from .graph import Graph, closed_neighborhood_of_set, complement
from .neighborhood import neighborhood_polynomial
from .poly import IntPoly, one_plus_x_power, poly_eval_int, poly_sub


def is_dominating(g: Graph, w: int) -> bool:
    return closed_neighborhood_of_set(g, w) == g.full


def domination_polynomial(g: Graph, workers: int = 1) -> IntPoly:
    """D(G, x) by testing every vertex subset.

    The null graph gets ``D = 1``: the empty set dominates an empty vertex set.
    """
    config.check_vertices(g.n)
    hist = dominating_size_histogram(g, workers)
    return IntPoly(int(c) for c in hist)


def dominating_set_count(g: Graph, workers: int = 1) -> int:
    return poly_eval_int(domination_polynomial(g, workers), 1)


def domination_polynomial_via_complement(g: Graph, method: str = "direct", workers: int = 1) -> IntPoly:
    """(1 + x)^n minus the neighborhood polynomial of the complement."""
    config.check_vertices(g.n)
    nbar = neighborhood_polynomial(complement(g), method=method, workers=workers)
    return poly_sub(one_plus_x_power(g.n), nbar)
