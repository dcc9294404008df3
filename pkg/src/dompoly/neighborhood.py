"""The neighborhood complex and neighborhood polynomial.

A vertex set belongs to the neighborhood complex when it lies inside the
open neighborhood of some vertex. The null graph has an empty complex, so
its neighborhood polynomial is 0 (not 1).
"""
from __future__ import annotations

from . import config
from ._enum import complex_size_histogram, intersection_profile
from .graph import Graph, _check_set
from .poly import IntPoly, from_binomial_weights


def in_neighborhood_complex(g: Graph, x: int) -> bool:
    _check_set(g, x)
    return any(x & ~row == 0 for row in g.adj)


def neighborhood_polynomial_direct(g: Graph, workers: int = 1) -> IntPoly:
    config.check_vertices(g.n)
    return IntPoly(int(c) for c in complex_size_histogram(g, workers))


def neighborhood_polynomial_inclusion_exclusion(g: Graph, workers: int = 1) -> IntPoly:
    """Signed sum over nonempty ``W`` of ``(-1)^(|W|+1) (1+x)^|common N(W)|``."""
    config.check_vertices(g.n)
    profile = intersection_profile(g, workers)
    # Row s = 0 is the empty W and is excluded.
    weights = [sum((-1) ** (s + 1) * int(profile[s, c]) for s in range(1, g.n + 1))
               for c in range(g.n + 1)]
    return from_binomial_weights(weights)


METHODS = ("direct", "inclexcl", "bipartite")


def neighborhood_polynomial(g: Graph, method: str = "direct", workers: int = 1) -> IntPoly:
    if method == "direct":
        return neighborhood_polynomial_direct(g, workers)
    if method == "inclexcl":
        return neighborhood_polynomial_inclusion_exclusion(g, workers)
    if method == "bipartite":
        from .bipartite import neighborhood_polynomial_via_bipartite
        return neighborhood_polynomial_via_bipartite(g, workers)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def neighborhood_polynomial_downsets(g: Graph) -> IntPoly:
    """N(G, x) by materialising the union of all ``2^N(v)`` in pure Python.

    Cheap for sparse or tiny graphs, where it avoids the ``2^n`` sweep.
    """
    config.check_vertices(g.n)
    return downset_union_polynomial(g.n, g.adj)


def downset_union_polynomial(n: int, rows) -> IntPoly:
    """Size generating function of the union of the subset lattices of ``rows``."""
    seen: set[int] = set()
    for row in set(rows):
        sub = row
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & row
    counts = [0] * (n + 1)
    for x in seen:
        counts[x.bit_count()] += 1
    return IntPoly(counts)
