from __future__ import annotations

import pytest

from snarkcrit.generators import FAMILIES, chain_cluster, generate, three_gadget_snark
from snarkcrit.graph import bridges


def test_petersen():
    g = generate("petersen")
    assert (g.n_vertices, g.n_edges, g.girth()) == (10, 15, 5)
    assert g.is_cubic()


@pytest.mark.parametrize("family", ["petersen", "k4", "k33", "prism"])
def test_cubic_families(family):
    assert generate(family).is_cubic()


def test_flower_needs_parameter():
    assert generate("flower", 5).n_vertices == 20
    with pytest.raises(ValueError):
        generate("flower")
    with pytest.raises(ValueError):
        generate("flower", 3)


def test_unknown_family():
    with pytest.raises(ValueError):
        generate("tietze")
    assert "chain_cluster" in FAMILIES


def test_chain_cluster_shape():
    for n in range(1, 6):
        g = chain_cluster(n)
        assert g.n_vertices == 9 * n + 8
        assert g.is_subcubic() and not g.is_cubic()
    with pytest.raises(ValueError):
        chain_cluster(0)


def test_fixtures_match_generators():
    assert generate("fixture_example1") == chain_cluster(4)
    assert generate("fixture_example2") == three_gadget_snark()


def test_example2_fixture_is_cubic_bridgeless():
    g = generate("fixture_example2")
    assert (g.n_vertices, g.n_edges) == (28, 42)
    assert g.is_cubic() and not bridges(g, g.all_edges().bits)


def test_example1_boundary_is_strictly_subcubic():
    g = generate("fixture_example1")
    assert min(g.degrees()) == 2
