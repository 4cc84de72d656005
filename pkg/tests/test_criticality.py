from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from snarkcrit.colouring import ColouringOracle, plain_is_colourable
from snarkcrit.criticality import (MCS_CHECKS, ContractError, brute_force_mcs, decompose, disjoint_pairs_separated,
                                   enumerate_all_mcs, grow_from_edge, mcs_invariants, minimal_transversals,
                                   shrink_to_mcs)
from snarkcrit.generators import k4, petersen
from snarkcrit.graph import EdgeSet, Graph

from conftest import graph, solved
from test_colouring import subcubic_graphs

# frozen after cross-checking against brute force and the plain backtracker
MCS_COUNTS = {"k4": 0, "k33": 0, "prism": 0, "petersen": 10, "flower5": 20, "chain1": 1, "chain2": 2,
              "chain3": 3, "example1": 4, "example2": 27}


def small_graphs():
    p = petersen()
    return {
        "k4": k4(), "k33": graph("k33"), "prism": graph("prism"), "petersen": p,
        "petersen_minus_edge": Graph.from_edges(p.edges[1:], 10),
        "petersen_minus_vertex": Graph.from_edges([e for e in p.edges if 0 not in e], 10),
        "two_petersen_halves": Graph.from_edges(
            [e for e in p.edges if 0 not in e and 5 not in e] + [(0, 5)], 10),
    }


@pytest.mark.parametrize("name", sorted(MCS_COUNTS))
def test_mcs_counts_frozen(name):
    _, _, decomp, _ = solved(name)
    assert decomp.complete
    assert len(decomp.mcs_list) == MCS_COUNTS[name]


@pytest.mark.parametrize("name", sorted(small_graphs()))
def test_duality_matches_brute_force(name):
    g = small_graphs()[name]
    assert g.n_edges <= 18
    decomp = enumerate_all_mcs(g)
    expected = brute_force_mcs(g, lambda b: plain_is_colourable(g, b))
    assert decomp.mcs_bits == expected


@settings(max_examples=40, deadline=None)
@given(subcubic_graphs(max_n=9))
def test_duality_matches_brute_force_random(g):
    if g.n_edges > 13:
        return
    decomp = enumerate_all_mcs(g)
    assert decomp.mcs_bits == brute_force_mcs(g, lambda b: plain_is_colourable(g, b))
    assert bool(decomp.mcs_list) == (not plain_is_colourable(g, g.all_edges().bits))


def test_petersen_mcs_are_vertex_deletions():
    g, _, decomp, _ = solved("petersen")
    for mcs in decomp.mcs_list:
        assert len(mcs) == 12
        assert len(g.vertices_of(mcs.edge_set)) == 9


@pytest.mark.parametrize("name", ["petersen", "flower5", "chain3", "example1", "example2"])
def test_every_mcs_passes_invariants(name):
    g, oracle, decomp, _ = solved(name)
    for mcs in decomp.mcs_list:
        checks = mcs_invariants(g, mcs.bits, oracle)
        assert set(checks) == set(MCS_CHECKS)
        assert all(checks.values()), checks
    assert disjoint_pairs_separated(g, decomp.mcs_bits) == []


def test_invariants_detect_non_mcs():
    g = petersen()
    checks = mcs_invariants(g, g.all_edges().bits, ColouringOracle(g))
    assert not checks["minimal_conflicting"]
    assert not checks["resistance_one"]
    assert not checks["strictly_subcubic"]


@pytest.mark.parametrize("name", ["k4", "petersen", "chain2", "example1", "example2"])
def test_decomposition_partitions_edges(name):
    g, _, d, _ = solved(name)
    full = g.all_edges()
    assert (d.m_g | d.c_g | d.b_g) == full
    assert not (d.m_g & d.c_g) and not (d.m_g & d.b_g) and not (d.c_g & d.b_g)
    touched = g.vertices_of(d.m_g)
    for e in d.c_g:
        assert set(g.edges[e]) & touched
    for e in d.b_g:
        assert not set(g.edges[e]) & touched


def test_class_one_decomposition():
    g, _, d, _ = solved("k4")
    assert d.mcs_list == [] and d.b_g == g.all_edges()


def test_shrink_petersen_and_fixed_point():
    g = petersen()
    oracle = ColouringOracle(g)
    mcs = shrink_to_mcs(g.subgraph(g.all_edges()), oracle)
    assert len(g.vertices_of(mcs.edge_set)) >= 9
    again = shrink_to_mcs(g.subgraph(mcs.edge_set), oracle)
    assert again == mcs
    assert mcs.edge_set <= g.all_edges()


def test_shrink_example2_gadget_is_itself():
    g = graph("example2")
    gadget = EdgeSet(sum(1 << i for i, (u, v) in enumerate(g.edges) if u < 9 and v < 9), g.n_edges)
    assert shrink_to_mcs(g.subgraph(gadget)).edge_set == gadget


def test_shrink_rejects_colourable():
    g = k4()
    with pytest.raises(ContractError):
        shrink_to_mcs(g.subgraph(g.all_edges()))


def test_shrink_protect_keeps_edge():
    g, oracle, decomp, _ = solved("petersen")
    for e in range(g.n_edges):
        m = oracle.shrink(g.all_edges().bits, protect=1 << e)
        assert m >> e & 1 and oracle.is_conflicting(m)
        for f in range(g.n_edges):
            if f != e and m >> f & 1:
                assert oracle.is_colourable(m & ~(1 << f))


def test_grow_from_edge_petersen_all_minimal_colourings():
    g, oracle, decomp, res = solved("petersen")
    for mc in oracle.enumerate_minimal_colourings(res.r):
        for e in mc.conflict_set:
            forbidden = mc.conflict_set.without_edge(e)
            mcs = grow_from_edge(g, e, forbidden, oracle)
            assert e in mcs.edge_set and not (mcs.edge_set & forbidden)
            assert mcs.bits in decomp.mcs_bits


def test_grow_from_edge_example2_gadget():
    g, oracle, decomp, _ = solved("example2")
    inside = [sum(1 << i for i, (u, v) in enumerate(g.edges) if 9 * k <= u < 9 * k + 9 and 9 * k <= v < 9 * k + 9)
              for k in range(3)]
    e = (inside[0] & -inside[0]).bit_length() - 1
    f1 = (inside[1] & -inside[1]).bit_length() - 1
    f2 = (inside[2] & -inside[2]).bit_length() - 1
    mcs = grow_from_edge(g, e, g.edge_set([f1, f2]), oracle)
    assert mcs.bits == inside[0]


def test_grow_from_edge_class_one():
    with pytest.raises(ContractError):
        grow_from_edge(k4(), 0, EdgeSet.empty(6))


def test_budget_truncation_flags_incomplete():
    g = graph("flower5")
    decomp = enumerate_all_mcs(g, budget=10)
    assert not decomp.complete
    assert len(decomp.mcs_list) < 20


def test_minimal_transversals_small():
    sets = [0b011, 0b110]
    assert sorted(minimal_transversals(sets)) == [0b010, 0b101]
    assert list(minimal_transversals([])) == [0]
    assert list(minimal_transversals([0])) == []


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 2 ** 7 - 1), min_size=1, max_size=6))
def test_minimal_transversals_brute_force(sets):
    got = sorted(minimal_transversals(sets))
    hits = [t for t in range(2 ** 7) if all(t & s for s in sets)]
    minimal = sorted(t for t in hits if not any(u != t and u & t == u for u in hits))
    assert got == minimal


def test_decompose_sorts_and_dedups():
    g = petersen()
    d = decompose(g, [0b110, 0b011, 0b110])
    assert d.mcs_bits == [0b011, 0b110]
