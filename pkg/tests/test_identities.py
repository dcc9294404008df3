import json

import pytest
from hypothesis import given

import oracles
from conftest import graphs
from dompoly import (
    CapacityError,
    IntPoly,
    all_labeled_graphs,
    alternating_edge_subset_sum,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    lemma_parity_signed_sum,
    lemma_pi_signed_sum,
    path_graph,
    random_gnp,
    verify_all,
    verify_alternating_sum,
    verify_dn_identity,
)
from dompoly import config
from dompoly.identities import expected_alternating_sum, lemma_parity_family, lemma_parity_split


@pytest.mark.parametrize("g, coeffs", [
    (complete_graph(2), [0, 2]),
    (path_graph(3), [0, -1, 1]),
    (path_graph(4), []),
    (cycle_graph(4), [0, 0, -2]),
    (empty_graph(3), [1]),
])
def test_alternating_sum_examples(g, coeffs):
    assert oracles.alternating_sum_coeffs(g) == coeffs
    assert alternating_edge_subset_sum(g) == IntPoly(coeffs)


def test_alternating_sum_k2_by_hand():
    # N(K2) - N(empty on 2)
    assert IntPoly([1, 2]) - IntPoly([1]) == IntPoly([0, 2])


def test_alternating_sum_oracle_n4():
    for g in all_labeled_graphs(4):
        assert list(alternating_edge_subset_sum(g).coeffs) == oracles.alternating_sum_coeffs(g)


def test_alternating_sum_cap():
    with config.override(edge_subset_cap=3):
        with pytest.raises(CapacityError):
            alternating_edge_subset_sum(cycle_graph(4))


@pytest.mark.parametrize("r", range(1, 8))
def test_lemma_pi_k1(r):
    assert lemma_pi_signed_sum(1, r) == 1


def test_lemma_examples():
    assert lemma_pi_signed_sum(2, 1) == -1
    assert lemma_pi_signed_sum(2, 2) == 1
    assert lemma_parity_signed_sum(1, 1) == -1
    assert lemma_parity_signed_sum(2, 1) == 1
    assert lemma_parity_signed_sum(1, 2) == -1
    assert lemma_parity_family(1, 2) == [0b01, 0b10, 0b11]


def test_lemma_caps():
    with pytest.raises(CapacityError):
        lemma_pi_signed_sum(17, 1)
    with pytest.raises(ValueError):
        lemma_parity_signed_sum(0, 3)


@pytest.mark.parametrize("k, r", [(k, r) for k in range(1, 10) for r in range(1, 10) if k * r <= 9])
def test_parity_split(k, r):
    split = lemma_parity_split(k, r)
    assert split.disjoint and split.covers
    assert split.family_sum == (-1) ** (k * r - r + 1)
    assert split.last_block_only_sum == (-1) ** (k * r - r + 1)
    assert split.other_block_sum == 0


def test_verify_dn_identity(named):
    for name in ("K3", "P3"):
        rec = verify_dn_identity(named[name])
        assert rec.passed
    rec = verify_dn_identity(empty_graph(4))
    assert rec.passed and rec.left == IntPoly([1, 4, 6, 4, 1])


def test_verify_alternating_sum(named):
    rec = verify_alternating_sum(named["C4"])
    assert rec.passed and rec.left == IntPoly([0, 0, -2])
    assert verify_alternating_sum(named["P4"]).left.is_zero()
    assert verify_alternating_sum(empty_graph(3)).left == IntPoly([1])
    assert expected_alternating_sum(named["null"]).is_zero()


def test_verify_all_named(named):
    report = verify_all(named["C4"])
    assert report.passed and report.dominating_count == 11
    report = verify_all(named["K1"])
    assert report.passed and report.dominating_count == 1
    assert verify_all(random_gnp(10, 1, 2, 7)).passed
    assert verify_all(named["null"]).passed


def test_report_records_and_json(named):
    report = verify_all(named["P3"])
    names = [r.name for r in report.records]
    assert len(names) == len(set(names))
    assert "alternating_sum" in names
    data = json.loads(report.to_json())
    assert data["schema"] == 1 and data["pass"] is True
    dn = data["records"][0]
    assert dn["name"] == "dn_identity"
    assert dn["left"] == {"kind": "poly", "value": ["1", "3", "3", "1"]}
    assert "all identities hold" in report.to_text()
    assert "alternating_sum" not in [r.name for r in verify_all(named["P3"], include_altsum=False).records]


def test_report_skips_altsum_over_cap():
    g = complete_graph(7)  # 21 edges
    assert "alternating_sum" not in [r.name for r in verify_all(g).records]


@given(graphs(max_n=5))
def test_alternating_sum_matches_shape(g):
    assert verify_alternating_sum(g).passed


@given(graphs(max_n=9))
def test_verify_all_passes(g):
    assert verify_all(g, include_altsum=g.m <= 8).passed
