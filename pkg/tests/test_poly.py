import json

import pytest
from hypothesis import given, strategies as st

from dompoly.poly import (
    ZERO,
    IntPoly,
    from_json,
    one_plus_x_power,
    parse_text,
    poly_add,
    poly_eval_int,
    poly_sub,
    to_json,
    to_text,
)

polys = st.lists(st.integers(-(2**80), 2**80), max_size=8).map(IntPoly)


def test_add_examples():
    assert poly_add(IntPoly([1, 1]), IntPoly([0, 1])) == IntPoly([1, 2])
    assert poly_add(IntPoly([1, 3, 1]), IntPoly([0, 0, 2, 1])) == IntPoly([1, 3, 3, 1])


def test_canonical_zero():
    p = IntPoly([3, 0, -1])
    assert poly_sub(p, p).coeffs == ()
    assert IntPoly([0, 0, 0]) == ZERO
    assert ZERO.degree == -1


@pytest.mark.parametrize("k, coeffs", [(0, [1]), (3, [1, 3, 3, 1]), (4, [1, 4, 6, 4, 1])])
def test_one_plus_x_power(k, coeffs):
    assert one_plus_x_power(k).coeffs == tuple(coeffs)


def test_eval_examples():
    assert poly_eval_int(IntPoly([1, 3, 1]), 1) == 5
    assert poly_eval_int(ZERO, 17) == 0
    assert poly_eval_int(one_plus_x_power(4), 1) == 16


@pytest.mark.parametrize("k", range(21))
def test_binomial_row_sums(k):
    assert poly_eval_int(one_plus_x_power(k), 1) == 2**k


def test_large_coefficients_exact():
    big = IntPoly([2**100, -(2**90)])
    assert poly_eval_int(big + big, 1) == 2**101 - 2**91


@pytest.mark.parametrize("text, coeffs", [
    ("0", []),
    ("6*x^2 + 4*x^3 + x^4", [0, 0, 6, 4, 1]),
    ("1 + 3*x + x^2", [1, 3, 1]),
    ("-2*x^2", [0, 0, -2]),
    ("-x + x^2", [0, -1, 1]),
])
def test_text_format(text, coeffs):
    assert to_text(IntPoly(coeffs)) == text
    assert parse_text(text) == IntPoly(coeffs)


@pytest.mark.parametrize("bad", ["", "1 +", "x x", "1 -- x", "2*y", "+"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_text(bad)


def test_json_format():
    assert to_json(IntPoly([1, 0, -3])) == '["1", "0", "-3"]'
    assert to_json(ZERO) == "[]"
    assert from_json(json.dumps(["5", "0", "2"])) == IntPoly([5, 0, 2])
    with pytest.raises(ValueError):
        from_json("[1, 2]")


@given(polys, polys)
def test_add_commutative(a, b):
    assert a + b == b + a


@given(polys, polys, polys)
def test_add_associative(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(polys)
def test_sub_self_is_zero(a):
    assert (a - a).is_zero()


@given(polys)
def test_roundtrips(a):
    assert parse_text(to_text(a)) == a
    assert from_json(to_json(a)) == a
    assert not a.coeffs or a.coeffs[-1] != 0


@given(polys, st.integers(-5, 5))
def test_eval_matches_power_sum(a, t):
    assert poly_eval_int(a, t) == sum(c * t**k for k, c in enumerate(a.coeffs))
