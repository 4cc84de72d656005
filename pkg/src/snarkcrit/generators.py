"""Named graphs used as the analysis corpus.

The two fixtures are hand transcriptions of published drawings and live as
edge-list files under ``snarkcrit/data``; :func:`chain_cluster` rebuilds the
first one programmatically so the two can be compared.
"""

from __future__ import annotations

from importlib import resources

from .graph import Graph
from .io import parse_edge_list

FAMILIES = ("petersen", "flower", "k4", "k33", "prism", "chain_cluster",
            "fixture_example1", "fixture_example2")


def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))          # outer 5-cycle
        edges.append((i, i + 5))                # spokes
        edges.append((i + 5, (i + 2) % 5 + 5))  # inner pentagram
    return Graph.from_edges(edges, 10, name="petersen")


def flower(k: int) -> Graph:
    """Flower snark J_k: 4k vertices, centre a_i joined to b_i, c_i, d_i.

    The b_i form a k-cycle; the c_i and d_i together form one 2k-cycle
    c_0 .. c_{k-1} d_0 .. d_{k-1}.
    """
    if k < 5 or k % 2 == 0:
        raise ValueError(f"flower snark needs an odd parameter >= 5, got {k}")
    a, b, c, d = (lambda i: 4 * i), (lambda i: 4 * i + 1), (lambda i: 4 * i + 2), (lambda i: 4 * i + 3)
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges += [(a(i), b(i)), (a(i), c(i)), (a(i), d(i)), (b(i), b(j))]
        if i < k - 1:
            edges += [(c(i), c(j)), (d(i), d(j))]
    edges += [(c(k - 1), d(0)), (d(k - 1), c(0))]
    return Graph.from_edges(edges, 4 * k, name=f"flower{k}")


def k4() -> Graph:
    return Graph.from_edges([(i, j) for i in range(4) for j in range(i + 1, 4)], 4, name="k4")


def k33() -> Graph:
    return Graph.from_edges([(i, j) for i in range(3) for j in range(3, 6)], 6, name="k33")


def prism() -> Graph:
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return Graph.from_edges(edges, 6, name="prism")


def _pentagram(base: int) -> list[tuple[int, int]]:
    return [(base + i, base + (i + 2) % 5) for i in range(5)]


def chain_cluster(n: int) -> Graph:
    """Chain of ``n + 1`` blocks whose consecutive pairs form ``n`` overlapping gadgets.

    A block is a pentagram x0..x4 with pendant path f0-f1-f2 hung from
    x2, x3, x4 (the Petersen graph minus two adjacent vertices). Block j is
    tied to block j+1 by the path x0(j)-m_j-x1(j+1) through a subdivision
    vertex m_j and by the edge f2(j)-f0(j+1). Block j occupies vertices
    9j..9j+7 and m_j is vertex 9j+8.

    Every 3-edge-colouring of a block gives x0 and f2 the same missing
    colour, and likewise x1 and f0; the subdivided tie then forces two
    different colours where the blocks demand one, so two tied blocks are
    not 3-edge-colourable while a single block is.
    """
    if n < 1:
        raise ValueError(f"chain_cluster needs at least one gadget, got {n}")
    edges: list[tuple[int, int]] = []
    for j in range(n + 1):
        base = 9 * j
        x = [base + i for i in range(5)]
        f = [base + 5, base + 6, base + 7]
        edges += _pentagram(base)
        edges += [(x[2], f[0]), (x[3], f[1]), (x[4], f[2]), (f[0], f[1]), (f[1], f[2])]
        if j < n:
            mid = base + 8
            nxt = base + 9
            edges += [(x[0], mid), (mid, nxt + 1), (f[2], nxt + 5)]
    return Graph.from_edges(edges, 9 * n + 8, name=f"chain{n}")


def three_gadget_snark() -> Graph:
    """Cubic graph built from three copies of Petersen-minus-a-vertex.

    Each copy is a pentagram a0..a4 plus the path b0-b1-b2-b3 with spokes
    a_i-b_i (i < 4). The three a4 vertices meet at a centre vertex and the
    copies are joined in a ring by b3(g)-b0(g+1).
    """
    centre = 27
    edges: list[tuple[int, int]] = []
    for g in range(3):
        base = 9 * g
        a = [base + i for i in range(5)]
        b = [base + 5 + i for i in range(4)]
        edges += _pentagram(base)
        edges += [(b[0], b[1]), (b[1], b[2]), (b[2], b[3])]
        edges += [(a[i], b[i]) for i in range(4)]
        edges.append((a[4], centre))
        edges.append((b[3], 9 * ((g + 1) % 3) + 5))
    return Graph.from_edges(edges, 28, name="example2")


def _load_fixture(filename: str, name: str) -> Graph:
    text = resources.files("snarkcrit").joinpath("data", filename).read_text(encoding="ascii")
    return parse_edge_list(text, name=name)


def fixture_example1() -> Graph:
    return _load_fixture("example1.edgelist", "example1")


def fixture_example2() -> Graph:
    return _load_fixture("example2.edgelist", "example2")


def generate(family: str, parameter: int | None = None) -> Graph:
    """Build a named graph. ``parameter`` is used by ``flower`` and ``chain_cluster``."""
    if family == "flower":
        if parameter is None:
            raise ValueError("flower requires an odd parameter >= 5")
        return flower(parameter)
    if family == "chain_cluster":
        if parameter is None:
            raise ValueError("chain_cluster requires a parameter >= 1")
        return chain_cluster(parameter)
    simple = {
        "petersen": petersen, "k4": k4, "k33": k33, "prism": prism,
        "fixture_example1": fixture_example1, "fixture_example2": fixture_example2,
    }
    if family not in simple:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    return simple[family]()
