import pytest
from hypothesis import given

from conftest import graphs
from dompoly import (
    CapacityError,
    ParseError,
    all_labeled_graphs,
    complete_graph,
    empty_graph,
    from_edge_list,
    parse_edge_list,
    parse_graph6,
    path_graph,
    read_graph,
    write_edge_list,
    write_graph6,
)
from dompoly import config


@pytest.mark.parametrize("text, g", [
    ("@", complete_graph(1)),
    ("A_", complete_graph(2)),
    ("A?", empty_graph(2)),
    ("?", empty_graph(0)),
])
def test_graph6_examples(text, g):
    assert parse_graph6(text) == g
    assert write_graph6(g) == text


def test_graph6_bit_order():
    # n=4: bits (0,1)(0,2)(1,2)(0,3)(1,3)(2,3); only (2,3) set -> 000001 -> chr(64)
    assert write_graph6(from_edge_list(4, [(2, 3)])) == "C@"
    # only (0,2) -> 010000 -> 16 + 63
    assert write_graph6(from_edge_list(4, [(0, 2)])) == "C" + chr(16 + 63)
    # C4 0-1-2-3-0: (0,1),(1,2),(2,3),(0,3) -> 101101 -> 45 + 63 = 'l'
    assert write_graph6(from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)])) == "Cl"


def test_graph6_padding_n5():
    # 10 bits -> two bytes, last byte carries 2 padding bits
    g = complete_graph(5)
    assert write_graph6(g) == "D~{"
    assert parse_graph6("D~{") == g


@pytest.mark.parametrize("bad, pos", [
    ("", 0),
    ("A", 1),
    ("A_?", 2),
    ("A`", 1),
    ("A \x7f", 1),
    (">>graph6<<A_", 0),
    ("D~|", 2),
])
def test_graph6_malformed(bad, pos):
    with pytest.raises(ParseError) as info:
        parse_graph6(bad)
    assert info.value.position == pos


def test_graph6_capacity():
    with pytest.raises(CapacityError):
        parse_graph6("~??~")
    with config.override(max_vertices=40):
        g = empty_graph(40)
        assert parse_graph6(write_graph6(g)) == g
    with pytest.raises(CapacityError):
        parse_graph6(chr(63 + 30) + "?" * 73)


def test_graph6_roundtrip_all_5_vertex():
    seen = set()
    for g in all_labeled_graphs(5):
        s = write_graph6(g)
        seen.add(s)
        assert parse_graph6(s) == g
    assert len(seen) == 1024


def test_edge_list_examples():
    assert parse_edge_list("3 2\n0 1\n1 2\n") == path_graph(3)
    assert parse_edge_list("2 0\n") == empty_graph(2)
    text = "# a path\n3 2\n\n2 1  # reversed\n1 0\n"
    assert write_edge_list(parse_edge_list(text)) == "3 2\n0 1\n1 2\n"


@pytest.mark.parametrize("bad, line", [
    ("3 3\n0 1\n1 2\n", 4),
    ("3 1\n0 1\n1 2\n", 3),
    ("3 1\n0 3\n", 2),
    ("3 1\n1 1\n", 2),
    ("3 2\n0 1\n1 0\n", 3),
    ("3\n", 1),
    ("3 1\n0 x\n", 2),
    ("", 1),
])
def test_edge_list_malformed(bad, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(bad)
    assert info.value.position == line


def test_edge_list_roundtrip_all_5_vertex():
    for g in all_labeled_graphs(5):
        assert parse_edge_list(write_edge_list(g)) == g


def test_read_graph_detection():
    assert read_graph("A_\n") == complete_graph(2)
    assert read_graph("2 1\n0 1\n") == complete_graph(2)
    assert read_graph("@", fmt="g6") == complete_graph(1)
    with pytest.raises(ParseError):
        read_graph("A_\nA?\n")


@given(graphs(max_n=9))
def test_roundtrips(g):
    assert parse_graph6(write_graph6(g)) == g
    assert parse_edge_list(write_edge_list(g)) == g


@given(graphs(max_n=7), graphs(max_n=7))
def test_writers_canonical(g, h):
    assert (write_graph6(g) == write_graph6(h)) == (g == h)
    assert (write_edge_list(g) == write_edge_list(h)) == (g == h)
