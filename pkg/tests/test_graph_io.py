from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from snarkcrit.generators import flower, k4, petersen
from snarkcrit.graph import EdgeSet, Graph, GraphError, bridges
from snarkcrit.io import (GraphFormatError, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6,
                          read_graph)

from conftest import CORPUS, graph


def test_petersen_graph6_decodes_to_cubic_girth_five():
    g = parse_graph6("IsP@OkWHG")
    assert (g.n_vertices, g.n_edges) == (10, 15)
    assert g.is_cubic() and g.girth() == 5


def test_k4_graph6():
    g = parse_graph6("C~")
    assert g.edges == k4().edges


@pytest.mark.parametrize("text", ["", "C", "C~~", "C\x7f", "B~"])
def test_graph6_rejects_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_graph6(text)


def test_graph6_error_names_offset():
    with pytest.raises(GraphFormatError) as info:
        parse_graph6("C~ ~")
    assert info.value.offset is not None


def test_graph6_header_and_long_form():
    g = Graph.from_edges([(i, i + 1) for i in range(69)], 70)
    text = emit_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(">>graph6<<" + text).edges == g.edges


def test_edge_list_triangle_and_errors():
    assert parse_edge_list("0 1\n1 2\n0 2").edges == ((0, 1), (0, 2), (1, 2))
    with pytest.raises(GraphFormatError) as info:
        parse_edge_list("0 1\n0 1")
    assert info.value.offset == 2
    with pytest.raises(GraphFormatError):
        parse_edge_list("3 3")
    with pytest.raises(GraphFormatError):
        parse_edge_list("0 x")
    with pytest.raises(GraphFormatError):
        parse_edge_list("0 1 2")
    with pytest.raises(GraphFormatError):
        parse_edge_list("# nothing\n")


def test_edge_list_comments_and_blank_lines():
    g = parse_edge_list("# header\n\n1 0  # trailing\n2 1\n")
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_graph6_round_trip(name):
    g = graph(name)
    assert parse_graph6(emit_graph6(g)) == g


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_edge_list_permutation_gives_identical_graph(name):
    g = graph(name)
    lines = emit_edge_list(g).splitlines()
    random.Random(7).shuffle(lines)
    swapped = [" ".join(reversed(line.split())) for line in lines]
    assert parse_edge_list("\n".join(swapped)) == g


def test_read_graph_by_extension(tmp_path):
    p = tmp_path / "p.g6"
    p.write_text("IsP@OkWHG\n")
    assert read_graph(p).n_edges == 15
    q = tmp_path / "t.edges"
    q.write_text("0 1\n1 2\n")
    assert read_graph(q).n_edges == 2
    with pytest.raises(GraphFormatError):
        read_graph(q, "g6")


def test_graph_rejects_loops_and_parallel_edges():
    with pytest.raises(GraphError):
        Graph.from_edges([(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges([(0, 1), (1, 0)])


def test_canonical_edge_order_and_degrees():
    g = Graph.from_edges([(3, 2), (0, 3), (1, 0)])
    assert g.edges == ((0, 1), (0, 3), (2, 3))
    assert g.index_of(3, 0) == 1
    assert g.max_degree == 2 and g.is_subcubic() and not g.is_cubic()
    with pytest.raises(GraphError):
        g.require_cubic()


def test_edge_set_operations():
    a = EdgeSet.from_indices([0, 2], 4)
    b = EdgeSet.from_indices([2, 3], 4)
    assert (a | b).indices() == [0, 2, 3]
    assert (a & b).indices() == [2]
    assert (a - b).indices() == [0]
    assert (a & b) <= a and not a <= b
    assert a.complement().indices() == [1, 3]
    with pytest.raises(ValueError):
        a | EdgeSet.empty(5)
    with pytest.raises(IndexError):
        EdgeSet.from_indices([4], 4)


def test_bridges():
    g = Graph.from_edges([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
    assert [g.edges[i] for i in bridges(g, g.all_edges().bits)] == [(2, 3)]
    assert not bridges(petersen(), petersen().all_edges().bits)


def test_flower_sizes():
    for k in (5, 7, 9):
        g = flower(k)
        assert (g.n_vertices, g.n_edges) == (4 * k, 6 * k) and g.is_cubic()
    with pytest.raises(ValueError):
        flower(6)


@st.composite
def simple_graphs(draw, max_n=12):
    n = draw(st.integers(2, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=3 * n))
    return Graph.from_edges(chosen, n)


@settings(max_examples=100, deadline=None)
@given(simple_graphs())
def test_graph6_round_trip_property(g):
    assert parse_graph6(emit_graph6(g)) == g


@settings(max_examples=100, deadline=None)
@given(simple_graphs(), st.randoms(use_true_random=False))
def test_relabel_preserves_degree_sequence(g, rnd):
    perm = list(range(g.n_vertices))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert h.n_edges == g.n_edges
