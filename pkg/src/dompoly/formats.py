"""graph6 and plain edge-list reading and writing.

graph6 here is the bare one-line form for ``n <= 62``: one byte ``n + 63``
followed by the upper triangle of the adjacency matrix in column order
(``(0,1), (0,2), (1,2), (0,3), ...``), six bits per byte, each byte offset
by 63, zero-padded. The ``>>graph6<<`` header, sparse6 and digraph6 are
rejected.

Edge lists are ``n m`` on the first non-comment line followed by ``m``
lines ``u v`` (0-based). ``#`` starts a comment.
"""
from __future__ import annotations

from typing import Iterator

from .errors import CapacityError, ParseError
from .graph import Graph, from_edge_list

GRAPH6_MAX_N = 62


def _graph6_bit_length(n: int) -> int:
    return n * (n - 1) // 2


def parse_graph6(s: str) -> Graph:
    line = s.rstrip("\r\n")
    if not line:
        raise ParseError("empty graph6 string", 0)
    if line.startswith(">>"):
        raise ParseError("graph6 headers are not accepted", 0)
    for i, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside the graph6 range 63..126", i)
    if line[0] == "~":
        raise CapacityError(f"graph6 only supported up to {GRAPH6_MAX_N} vertices")
    n = ord(line[0]) - 63
    nbits = _graph6_bit_length(n)
    nbytes = -(-nbits // 6)
    body = line[1:]
    if len(body) < nbytes:
        raise ParseError(f"truncated graph6: expected {nbytes} data bytes for n={n}", len(line))
    if len(body) > nbytes:
        raise ParseError("trailing bytes after graph6 data", 1 + nbytes)
    bits = 0
    for ch in body:
        bits = bits << 6 | (ord(ch) - 63)
    pad = 6 * nbytes - nbits
    if bits & ((1 << pad) - 1):
        raise ParseError("nonzero graph6 padding bits", len(line) - 1)
    bits >>= pad
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                edges.append((i, j))
            k -= 1
    return from_edge_list(n, edges)


def write_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise CapacityError(f"graph6 only supported up to {GRAPH6_MAX_N} vertices")
    nbits = _graph6_bit_length(g.n)
    nbytes = -(-nbits // 6)
    bits = 0
    for j in range(1, g.n):
        for i in range(j):
            bits = bits << 1 | (g.adj[i] >> j & 1)
    bits <<= 6 * nbytes - nbits
    chunks = [chr(63 + (bits >> (6 * (nbytes - 1 - t)) & 63)) for t in range(nbytes)]
    return chr(63 + g.n) + "".join(chunks)


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {line!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer token in {line!r}", lineno) from None


def parse_edge_list(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing 'n m' header", 1)
    lineno, header = lines[0]
    n, m = _ints(header, lineno, 2)
    if n < 0 or m < 0:
        raise ParseError("n and m must be nonnegative", lineno)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno) + 1
        raise ParseError(f"header declares {m} edges, found {len(body)}", where)
    seen = set()
    for lineno, line in body:
        u, v = _ints(line, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1} in {line!r}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
    return from_edge_list(n, seen)


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"{g.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def detect_format(text: str) -> str:
    """``"edges"`` if the first content line has whitespace, else ``"g6"``."""
    for _, line in _content_lines(text):
        return "edges" if len(line.split()) > 1 else "g6"
    raise ParseError("no graph data", 1)


def read_graph(text: str, fmt: str | None = None) -> Graph:
    """Parse a single graph; ``fmt`` is ``"g6"``, ``"edges"`` or None to detect."""
    fmt = fmt or detect_format(text)
    if fmt == "edges":
        return parse_edge_list(text)
    if fmt == "g6":
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected exactly one graph6 line, found {len(lines)}", 1)
        return parse_graph6(lines[0].strip())
    raise ValueError(f"unknown format {fmt!r}")


def iter_graph6_lines(lines) -> Iterator[tuple[int, str]]:
    """``(line_number, graph6)`` for every nonblank line."""
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if line:
            yield lineno, line
