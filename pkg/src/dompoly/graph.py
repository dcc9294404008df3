"""Immutable simple graphs on vertices ``0..n-1`` with bitset adjacency.

Vertex sets are plain ``int`` bitmasks (bit ``v`` set means ``v`` is in the
set). Edge sets are frozensets of ``(u, v)`` tuples with ``u < v``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from . import config
from .errors import CapacityError, GraphInputError

Edge = tuple[int, int]


def vertex_set(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphInputError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphInputError(f"row {v} has bits beyond vertex {self.n - 1}")
            if row >> v & 1:
                raise GraphInputError(f"loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise GraphInputError(f"asymmetric adjacency between {u} and {v}")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        """Edges in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges())

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def isolated_mask(self) -> int:
        return vertex_set(v for v, row in enumerate(self.adj) if row == 0)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    if n < 0:
        raise GraphInputError("vertex count must be nonnegative")
    config.check_vertices(n)
    adj = [0] * n
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge {{{u},{v}}} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_adjacency_masks(adj: Iterable[int]) -> Graph:
    adj = tuple(adj)
    config.check_vertices(len(adj))
    return Graph(len(adj), adj)


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def open_neighborhood_of_set(g: Graph, w: int) -> int:
    _check_set(g, w)
    union = 0
    for v in members(w):
        union |= g.adj[v]
    return union & ~w


def closed_neighborhood_of_set(g: Graph, w: int) -> int:
    return open_neighborhood_of_set(g, w) | w


def common_neighborhood(g: Graph, w: int) -> int:
    """Intersection of the open neighborhoods of the vertices in ``w``.

    The empty intersection is the whole vertex set.
    """
    common = g.full
    for v in members(w):
        common &= g.adj[v]
    return common


def edge_boundary(g: Graph, w: int) -> frozenset[Edge]:
    _check_set(g, w)
    out = set()
    for u in members(w):
        for v in members(g.adj[u] & ~w):
            out.add(_norm_edge(u, v))
    return frozenset(out)


def delete_edges(g: Graph, f: Iterable[Iterable[int]]) -> Graph:
    adj = list(g.adj)
    for edge in f:
        u, v = edge
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise GraphInputError(f"{{{u},{v}}} is not an edge of the graph")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def add_isolated_vertices(g: Graph, k: int = 1) -> Graph:
    config.check_vertices(g.n + k)
    return Graph(g.n + k, g.adj + (0,) * k)


def _check_set(g: Graph, w: int) -> None:
    if w < 0 or w >> g.n:
        raise GraphInputError(f"vertex set {w:#x} has bits outside 0..{g.n - 1}")


# Named families -------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(p: int, q: int) -> Graph:
    """K_{p,q} with parts ``0..p-1`` and ``p..p+q-1``."""
    return from_edge_list(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, ordered by edge-subset bitmask.

    Bit ``i`` of the index selects the ``i``-th pair in lexicographic order.
    """
    config.check_vertices(n)
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


# Seeded G(n, p) --------------------------------------------------------------

_MASK64 = (1 << 64) - 1


def splitmix64(seed: int) -> Iterator[int]:
    """SplitMix64 stream (Steele, Lea, Flood 2014), one 64-bit word per draw."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def random_gnp(n: int, p_num: int, p_den: int, seed: int) -> Graph:
    """Seeded Erdos-Renyi graph with edge probability ``p_num / p_den``.

    One SplitMix64 word ``r`` is drawn per pair ``(u, v)``, ``u < v``, in
    lexicographic order; the pair is an edge iff ``(r * p_den) >> 64 < p_num``.
    """
    if p_den <= 0 or not 0 <= p_num <= p_den:
        raise GraphInputError("edge probability must satisfy 0 <= p_num <= p_den, p_den > 0")
    if n < 0:
        raise GraphInputError("vertex count must be nonnegative")
    if n > config.max_vertices():
        raise CapacityError(f"graph has {n} vertices, capacity is {config.max_vertices()}")
    stream = splitmix64(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if (next(stream) * p_den) >> 64 < p_num]
    return from_edge_list(n, edges)
