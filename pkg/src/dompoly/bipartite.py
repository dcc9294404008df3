"""Complete bipartite subgraphs: classification, census and the counting
formulas built on them.

A complete bipartite subgraph of ``G`` is an unordered pair ``{A, B}`` of
disjoint nonempty vertex sets with every ``A``-``B`` pair an edge of ``G``.
Edges inside ``A`` or inside ``B`` are irrelevant. Equivalently it is an edge
subset ``F`` such that ``(V, F)`` is ``K_{p,q}`` plus isolated vertices.

Parity classes: ``a`` counts pairs with both sides of even size (so sides
of at least 2), ``b`` counts pairs with both sides odd (single edges
included). Mixed-parity pairs count toward neither.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb

from . import config
from ._enum import intersection_profile, parity_profile
from .graph import Graph, complement, members
from .poly import ONE, ZERO, IntPoly, poly_sum


@dataclass(frozen=True)
class Empty:
    """No edges (isolated vertices only)."""


@dataclass(frozen=True)
class CompleteBipartite:
    p: int
    q: int


@dataclass(frozen=True)
class Other:
    """Neither edgeless nor a complete bipartite graph plus isolated vertices."""


Classification = Empty | CompleteBipartite | Other


def classify_complete_bipartite(g: Graph) -> Classification:
    active = [v for v in range(g.n) if g.adj[v]]
    if not active:
        return Empty()
    support = sum(1 << v for v in active)
    side_b = g.adj[active[0]]
    side_a = support & ~side_b
    if all(g.adj[v] == side_b for v in members(side_a)) and all(
        g.adj[v] == side_a for v in members(side_b)
    ):
        p, q = sorted((side_a.bit_count(), side_b.bit_count()))
        return CompleteBipartite(p, q)
    return Other()


def biclique_term(p: int, q: int) -> IntPoly:
    """``(-1)^(q+1) x^p + (-1)^(p+1) x^q``."""
    return IntPoly.monomial(p, (-1) ** (q + 1)) + IntPoly.monomial(q, (-1) ** (p + 1))


def h_polynomial(g: Graph) -> IntPoly:
    shape = classify_complete_bipartite(g)
    if isinstance(shape, Empty):
        return ONE
    if isinstance(shape, CompleteBipartite):
        return biclique_term(shape.p, shape.q)
    return ZERO


@dataclass(frozen=True)
class BipartiteCensus:
    counts: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def a(self) -> int:
        return sum(c for (p, q), c in self.counts.items() if p % 2 == 0 and q % 2 == 0)

    @property
    def b(self) -> int:
        return sum(c for (p, q), c in self.counts.items() if p % 2 == 1 and q % 2 == 1)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "counts": [{"p": p, "q": q, "count": str(c)} for (p, q), c in sorted(self.counts.items())],
            "a": str(self.a),
            "b": str(self.b),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> BipartiteCensus:
        counts = {(int(e["p"]), int(e["q"])): int(e["count"]) for e in data["counts"]}
        census = cls(counts)
        if str(census.a) != str(data.get("a", census.a)) or str(census.b) != str(data.get("b", census.b)):
            raise ValueError("census totals do not match its entries")
        return census

    def to_text(self) -> str:
        lines = [f"K_{{{p},{q}}}: {c}" for (p, q), c in sorted(self.counts.items())]
        lines += [f"a = {self.a}", f"b = {self.b}"]
        return "\n".join(lines)


def count_complete_bipartite_subgraphs(g: Graph, workers: int = 1) -> BipartiteCensus:
    """Census of complete bipartite subgraphs keyed by side sizes ``p <= q``.

    For every nonempty ``A`` the valid partners ``B`` are the nonempty subsets
    of the common neighborhood of ``A``; they are tallied by size, giving
    ordered pairs ``(A, B)`` which are then folded into unordered ones.
    """
    config.check_vertices(g.n)
    profile = intersection_profile(g, workers)
    n = g.n
    ordered: dict[tuple[int, int], int] = {}
    for s in range(1, n + 1):
        for c in range(1, n + 1):
            count = int(profile[s, c])
            if not count:
                continue
            for j in range(1, c + 1):
                ordered[s, j] = ordered.get((s, j), 0) + count * comb(c, j)
    counts = {}
    for (p, q), c in ordered.items():
        if p < q:
            counts[p, q] = c
        elif p == q:
            if c % 2:
                raise ArithmeticError(f"odd ordered count {c} for K_{{{p},{p}}}")
            counts[p, q] = c // 2
    return BipartiteCensus(dict(sorted(counts.items())))


def count_parity_classes_fast(g: Graph, workers: int = 1) -> tuple[int, int]:
    """``(a, b)`` without building the census.

    A common neighborhood of size ``c >= 1`` offers ``2^(c-1) - 1`` nonempty
    even partners and ``2^(c-1)`` odd ones.
    """
    config.check_vertices(g.n)
    profile = parity_profile(g, workers)
    even_even = odd_odd = 0
    for c in range(1, g.n + 1):
        half = 1 << (c - 1)
        even_even += int(profile[0, c]) * (half - 1)
        odd_odd += int(profile[1, c]) * half
    if even_even % 2 or odd_odd % 2:
        raise ArithmeticError("ordered biclique counts must be even")
    return even_even // 2, odd_odd // 2


def dominating_count_from_parity(n: int, a: int, b: int) -> int:
    """``2^n - 1 + 2(a - b)``.

    The ``- 1`` is the empty set of the complement's neighborhood complex,
    which is absent for the null graph, so ``n = 0`` gives 1.
    """
    return 2 ** n - (1 if n else 0) + 2 * (a - b)


def dominating_count_via_bipartite(g: Graph, use_census: bool = False, workers: int = 1) -> int:
    """d(G) from the parity classes of complete bipartite subgraphs of the complement."""
    gbar = complement(g)
    if use_census:
        census = count_complete_bipartite_subgraphs(gbar, workers)
        a, b = census.a, census.b
    else:
        a, b = count_parity_classes_fast(gbar, workers)
    d = dominating_count_from_parity(g.n, a, b)
    if d % 2 != 1:
        raise ArithmeticError(f"dominating-set count {d} is even")
    return d


def neighborhood_polynomial_via_bipartite(g: Graph, workers: int = 1) -> IntPoly:
    """1 plus one signed ``x^p, x^q`` pair per complete bipartite subgraph.

    The null graph returns 0 to agree with its empty neighborhood complex.
    """
    if g.n == 0:
        return ZERO
    census = count_complete_bipartite_subgraphs(g, workers)
    return poly_sum([ONE] + [c * biclique_term(p, q) for (p, q), c in census.counts.items()])
