"""Exact dense integer polynomials in one indeterminate ``x``.

Coefficients are Python ints, so there is no fixed width to overflow. The
canonical zero polynomial has an empty coefficient tuple and no other
polynomial ends in a zero coefficient.
"""
from __future__ import annotations

import json
import re
from functools import lru_cache
from math import comb
from typing import Iterable


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> IntPoly:
        return cls([0] * k + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        return poly_add(self, other)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return poly_sub(self, other)

    def __neg__(self) -> IntPoly:
        return IntPoly(-a for a in self.coeffs)

    def __mul__(self, k: int) -> IntPoly:
        if not isinstance(k, int):
            return NotImplemented
        return IntPoly(k * a for a in self.coeffs)

    __rmul__ = __mul__

    def __call__(self, t: int) -> int:
        return poly_eval_int(self, t)

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


ZERO = IntPoly()
ONE = IntPoly([1])


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a.coeffs), len(b.coeffs))
    return IntPoly(a[k] + b[k] for k in range(n))


def poly_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a.coeffs), len(b.coeffs))
    return IntPoly(a[k] - b[k] for k in range(n))


def poly_sum(polys: Iterable[IntPoly]) -> IntPoly:
    acc: list[int] = []
    for p in polys:
        if len(p.coeffs) > len(acc):
            acc.extend([0] * (len(p.coeffs) - len(acc)))
        for k, a in enumerate(p.coeffs):
            acc[k] += a
    return IntPoly(acc)


@lru_cache(maxsize=None)
def one_plus_x_power(k: int) -> IntPoly:
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    return IntPoly(comb(k, i) for i in range(k + 1))


def poly_eval_int(p: IntPoly, t: int) -> int:
    acc = 0
    for a in reversed(p.coeffs):
        acc = acc * t + a
    return acc


def from_binomial_weights(weights: Iterable[int]) -> IntPoly:
    """``sum_c weights[c] * (1 + x)^c`` as a polynomial."""
    weights = list(weights)
    out = [0] * len(weights)
    for c, w in enumerate(weights):
        if w:
            for i in range(c + 1):
                out[i] += w * comb(c, i)
    return IntPoly(out)


# Serialization ---------------------------------------------------------------

def to_text(p: IntPoly) -> str:
    """Render as ``c0 + c1*x + c2*x^2 + ...``; unit coefficients are dropped."""
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "x" if k == 1 else f"x^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


_TERM = re.compile(r"([+-]?)(?:(\d+)(?:\*x(?:\^(\d+))?)?|x(?:\^(\d+))?)")


def parse_text(s: str) -> IntPoly:
    """Inverse of :func:`to_text`; repeated or unordered terms are summed."""
    body = "".join(s.split())
    if not body:
        raise ValueError("empty polynomial text")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(body):
        m = _TERM.match(body, pos)
        if not m or m.end() == pos or (pos > 0 and not m.group(1)):
            raise ValueError(f"bad polynomial text {s!r} at offset {pos}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(2) is not None:
            c = int(m.group(2))
            k = 0 if "x" not in m.group(0) else int(m.group(3) or 1)
        else:
            c = 1
            k = int(m.group(4) or 1)
        coeffs[k] = coeffs.get(k, 0) + sign * c
        pos = m.end()
    if not coeffs:
        return ZERO
    return IntPoly(coeffs.get(k, 0) for k in range(max(coeffs) + 1))


def to_json_value(p: IntPoly) -> list[str]:
    return [str(c) for c in p.coeffs]


def from_json_value(value: list[str]) -> IntPoly:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ValueError("polynomial JSON must be an array of decimal strings")
    return IntPoly(int(v) for v in value)


def to_json(p: IntPoly) -> str:
    return json.dumps(to_json_value(p))


def from_json(s: str) -> IntPoly:
    return from_json_value(json.loads(s))
