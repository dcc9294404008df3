"""Brute-force checks of the alternating-sum theorems, the two block lemmas,
and a per-graph report that runs every identity at once."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Union

from . import config
from .bipartite import (
    CompleteBipartite,
    Empty,
    classify_complete_bipartite,
    count_complete_bipartite_subgraphs,
    count_parity_classes_fast,
    dominating_count_from_parity,
    h_polynomial,
    neighborhood_polynomial_via_bipartite,
)
from .domination import domination_polynomial
from .errors import CapacityError
from .graph import Graph, complement
from .neighborhood import (
    downset_union_polynomial,
    neighborhood_polynomial_direct,
    neighborhood_polynomial_downsets,
    neighborhood_polynomial_inclusion_exclusion,
)
from .poly import ZERO, IntPoly, one_plus_x_power, poly_add, poly_eval_int, to_json_value, to_text

Value = Union[IntPoly, int, tuple[int, int]]


# Alternating edge-subset sum --------------------------------------------------

def alternating_edge_subset_sum(g: Graph) -> IntPoly:
    """``sum over F in E of (-1)^|F| N(G - F, x)``, over all ``2^m`` subsets.

    Subsets are visited in Gray-code order so each step toggles one edge.
    """
    edges = g.edges()
    m = len(edges)
    if m > config.edge_subset_cap():
        raise CapacityError(f"{m} edges exceed the edge-subset cap {config.edge_subset_cap()}")
    adj = list(g.adj)
    acc = list(neighborhood_polynomial_downsets(g).coeffs)
    size = 0
    for step in range(1, 1 << m):
        u, v = edges[(step & -step).bit_length() - 1]
        bit_u, bit_v = 1 << u, 1 << v
        if adj[u] & bit_v:
            size += 1
        else:
            size -= 1
        adj[u] ^= bit_v
        adj[v] ^= bit_u
        term = downset_union_polynomial(g.n, adj)
        sign = -1 if size % 2 else 1
        if len(term.coeffs) > len(acc):
            acc.extend([0] * (len(term.coeffs) - len(acc)))
        for k, c in enumerate(term.coeffs):
            acc[k] += sign * c
    return IntPoly(acc)


def expected_alternating_sum(g: Graph) -> IntPoly:
    """0 / signed ``x^p, x^q`` pair / 1 by shape; the null graph gives 0."""
    if g.n == 0:
        return ZERO
    return h_polynomial(g)


# Block lemmas -------------------------------------------------------------------

def _blocks(k: int, r: int) -> list[int]:
    if k < 1 or r < 1:
        raise ValueError("block size and block count must be positive")
    if k * r > config.lemma_cap():
        raise CapacityError(f"ground set of {k * r} elements exceeds the cap {config.lemma_cap()}")
    return [((1 << k) - 1) << (j * k) for j in range(r)]


def _proper_subsets(block: int) -> list[int]:
    out = []
    sub = block
    while True:
        if sub != block:
            out.append(sub)
        if sub == 0:
            return out
        sub = (sub - 1) & block


def lemma_pi_signed_sum(k: int, r: int) -> int:
    """Signed count of the product family of proper subsets of each block."""
    blocks = _blocks(k, r)
    total = 0
    for parts in product(*(_proper_subsets(b) for b in blocks)):
        total += (-1) ** sum(p.bit_count() for p in parts)
    return total


def lemma_parity_family(k: int, r: int) -> list[int]:
    """All subsets of the ground set containing at least one whole block."""
    blocks = _blocks(k, r)
    return [a for a in range(1 << (k * r)) if any(a & b == b for b in blocks)]


def lemma_parity_signed_sum(k: int, r: int) -> int:
    return sum((-1) ** a.bit_count() for a in lemma_parity_family(k, r))


@dataclass(frozen=True)
class ParitySplit:
    """The family split by whether a block other than the last is covered."""

    family_sum: int
    last_block_only_sum: int
    other_block_sum: int
    disjoint: bool
    covers: bool


def lemma_parity_split(k: int, r: int) -> ParitySplit:
    """Split the family into sets that contain the last block but no other
    block, and sets that contain some earlier block (last block arbitrary)."""
    blocks = _blocks(k, r)
    last = blocks[-1]
    rest = (1 << (k * r)) - 1 & ~last
    earlier = blocks[:-1]
    only_last = set()
    for a in range(1 << (k * r)):
        if a & last:
            continue
        if not any(a & b == b for b in earlier):
            only_last.add(a | last)
    with_earlier = set()
    for a in range(1 << (k * r)):
        if a & rest == a and any(a & b == b for b in earlier):
            sub = last
            while True:
                with_earlier.add(a | sub)
                if sub == 0:
                    break
                sub = (sub - 1) & last
    family = set(lemma_parity_family(k, r))
    sign = lambda s: sum((-1) ** a.bit_count() for a in s)  # noqa: E731
    return ParitySplit(
        family_sum=sign(family),
        last_block_only_sum=sign(only_last),
        other_block_sum=sign(with_earlier),
        disjoint=not (only_last & with_earlier),
        covers=(only_last | with_earlier) == family,
    )


# Reports ----------------------------------------------------------------------

def _value_json(v: Value) -> dict:
    if isinstance(v, IntPoly):
        return {"kind": "poly", "value": to_json_value(v)}
    if isinstance(v, tuple):
        return {"kind": "pair", "value": [str(x) for x in v]}
    return {"kind": "int", "value": str(v)}


def _value_text(v: Value) -> str:
    if isinstance(v, IntPoly):
        return to_text(v)
    if isinstance(v, tuple):
        return "(" + ", ".join(str(x) for x in v) + ")"
    return str(v)


@dataclass(frozen=True)
class IdentityRecord:
    name: str
    passed: bool
    left: Value
    right: Value

    def to_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed,
                "left": _value_json(self.left), "right": _value_json(self.right)}


@dataclass
class VerificationReport:
    n: int
    m: int
    records: list[IdentityRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def record(self, name: str) -> IdentityRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)

    @property
    def dominating_count(self) -> int:
        return self.record("main_theorem").left

    def to_dict(self) -> dict:
        return {"schema": 1, "n": self.n, "m": self.m, "pass": self.passed,
                "records": [r.to_dict() for r in self.records]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"graph: n={self.n} m={self.m}"]
        for r in self.records:
            mark = "PASS" if r.passed else "FAIL"
            lines.append(f"{mark} {r.name}: {_value_text(r.left)} | {_value_text(r.right)}")
        lines.append("all identities hold" if self.passed else "VERIFICATION FAILED")
        return "\n".join(lines)


def _rec(name: str, left: Value, right: Value) -> IdentityRecord:
    return IdentityRecord(name, left == right, left, right)


def verify_dn_identity(g: Graph, workers: int = 1) -> IdentityRecord:
    d = domination_polynomial(g, workers)
    nbar = neighborhood_polynomial_direct(complement(g), workers)
    return _rec("dn_identity", poly_add(d, nbar), one_plus_x_power(g.n))


def verify_alternating_sum(g: Graph) -> IdentityRecord:
    return _rec("alternating_sum", alternating_edge_subset_sum(g), expected_alternating_sum(g))


def verify_all(g: Graph, include_altsum: bool = True, workers: int = 1) -> VerificationReport:
    config.check_vertices(g.n)
    gbar = complement(g)
    report = VerificationReport(g.n, g.m)
    dpoly = domination_polynomial(g, workers)
    nbar = neighborhood_polynomial_direct(gbar, workers)
    report.records.append(_rec("dn_identity", poly_add(dpoly, nbar), one_plus_x_power(g.n)))

    d = poly_eval_int(dpoly, 1)
    a, b = count_parity_classes_fast(gbar, workers)
    report.records.append(_rec("main_theorem", d, dominating_count_from_parity(g.n, a, b)))
    report.records.append(_rec("dominating_count_odd", d % 2, 1))

    n_direct = neighborhood_polynomial_direct(g, workers)
    report.records.append(_rec("nbpoly_inclexcl", neighborhood_polynomial_inclusion_exclusion(g, workers), n_direct))
    report.records.append(_rec("nbpoly_bipartite", neighborhood_polynomial_via_bipartite(g, workers), n_direct))

    census = count_complete_bipartite_subgraphs(gbar, workers)
    report.records.append(_rec("census_parity", (a, b), (census.a, census.b)))

    if include_altsum and g.m <= config.edge_subset_cap():
        report.records.append(verify_alternating_sum(g))
    return report


def shape_label(g: Graph) -> str:
    shape = classify_complete_bipartite(g)
    if isinstance(shape, Empty):
        return "empty"
    if isinstance(shape, CompleteBipartite):
        return f"K_{{{shape.p},{shape.q}}}"
    return "other"
