"""Minimal conflicting subgraphs: extraction, growth and complete enumeration.

A conflicting subgraph is an edge set that is not 3-edge-colourable; it is
minimal when deleting any single edge makes it colourable. Subgraphs are
identified with their edge sets throughout.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .colouring import ColouringOracle
from .graph import EdgeInducedSubgraph, EdgeSet, Graph, bridges, iter_bits

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 6


class ContractError(ValueError):
    """An operation was called outside its precondition."""


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class MCS:
    """A minimal conflicting subgraph, identified by its edge set."""

    edge_set: EdgeSet

    @property
    def bits(self) -> int:
        return self.edge_set.bits

    def __len__(self) -> int:
        return len(self.edge_set)

    def indices(self) -> list[int]:
        return self.edge_set.indices()


MCS_CHECKS = ("minimal_conflicting", "resistance_one", "strictly_subcubic",
              "bridgeless", "degrees_two_or_three", "two_degree3_neighbours")


def mcs_invariants(g: Graph, bits: int, oracle: ColouringOracle) -> dict[str, bool]:
    """Evaluate each 3-criticality property of the edge set ``bits``."""
    deg = g.degrees_within(bits)
    minimal = oracle.is_conflicting(bits) and all(
        oracle.is_colourable(bits & ~(1 << e)) for e in iter_bits(bits))
    # resistance of the subgraph itself: one colour-0 edge suffices, none does not
    res_one = oracle.min_zero_count(bits, 1) == 1
    neighbours: dict[int, list[int]] = {v: [] for v in deg}
    for e in iter_bits(bits):
        u, v = g.edges[e]
        neighbours[u].append(v)
        neighbours[v].append(u)
    return {
        "minimal_conflicting": minimal,
        "resistance_one": res_one,
        "strictly_subcubic": any(d < 3 for d in deg.values()),
        "bridgeless": not bridges(g, bits),
        "degrees_two_or_three": all(d in (2, 3) for d in deg.values()),
        "two_degree3_neighbours": all(
            sum(1 for w in nb if deg[w] == 3) >= 2 for nb in neighbours.values()),
    }


def disjoint_pairs_separated(g: Graph, mcs_bits: list[int]) -> list[tuple[int, int]]:
    """Index pairs of edge-disjoint MCSs that nevertheless share a vertex (should be empty)."""
    verts = [g.vertices_of(b) for b in mcs_bits]
    bad = []
    for i in range(len(mcs_bits)):
        for j in range(i + 1, len(mcs_bits)):
            if not mcs_bits[i] & mcs_bits[j] and verts[i] & verts[j]:
                bad.append((i, j))
    return bad


@dataclass
class Decomposition:
    """All MCSs of a graph plus the partition of its edges they induce.

    ``m_g`` is the union of the MCSs, ``c_g`` the other edges touching it and
    ``b_g`` the remaining (buffer) edges. ``complete`` is false when the
    enumeration stopped on its budget; downstream checks refuse such input.
    """

    graph: Graph
    mcs_list: list[MCS]
    m_g: EdgeSet
    c_g: EdgeSet
    b_g: EdgeSet
    complete: bool = True
    oracle_calls: int = 0
    correction_sets: list[int] = field(default_factory=list, repr=False)

    @property
    def mcs_bits(self) -> list[int]:
        return [m.bits for m in self.mcs_list]


def _as_bits(scope: EdgeInducedSubgraph | EdgeSet | int) -> int:
    if isinstance(scope, int):
        return scope
    if isinstance(scope, EdgeInducedSubgraph):
        return scope.edge_set.bits
    return scope.bits


def shrink_to_mcs(scope: EdgeInducedSubgraph, oracle: ColouringOracle | None = None,
                  protect: int = 0, known: list[int] | None = None) -> MCS:
    """Reduce a conflicting subgraph to a minimal one inside it.

    Edges are checked once each in ascending index order: an edge is deleted
    if what remains is still conflicting, otherwise it stays. A single pass
    suffices because colourability is inherited by subgraphs.
    """
    g = scope.host
    oracle = oracle or ColouringOracle(g)
    bits = scope.edge_set.bits
    if oracle.is_colourable(bits):
        raise ContractError("shrink_to_mcs needs a conflicting subgraph")
    return MCS(EdgeSet(oracle.shrink(bits, protect=protect, known=known), g.n_edges))


def grow_from_edge(g: Graph, e: int, forbidden: EdgeSet | int,
                   oracle: ColouringOracle | None = None) -> MCS:
    """Find an MCS containing edge ``e`` and avoiding ``forbidden``.

    Starting from ``{e}``, the lowest-index edge adjacent to the current set
    and outside ``forbidden`` is added until the set stops being
    3-colourable; the result is then shrunk with ``e`` kept. Meant for
    ``forbidden`` = the other colour-0 edges of a minimal colouring.
    """
    oracle = oracle or ColouringOracle(g)
    forbid = _as_bits(forbidden)
    if forbid >> e & 1:
        raise ContractError(f"edge {e} is itself forbidden")
    nbrs = g.edge_neighbour_bits
    blocked = forbid | 1 << e
    grown = 1 << e
    while oracle.is_colourable(grown):
        frontier = 0
        for f in iter_bits(grown):
            frontier |= nbrs[f]
        frontier &= ~grown & ~blocked
        if not frontier:
            raise ContractError(
                f"no conflicting subgraph through edge {e} avoids the forbidden edges")
        grown |= frontier & -frontier
    if oracle.is_conflicting(grown & ~(1 << e)):
        raise ContractError(f"edge {e} is not needed for the conflict it grew into")
    return MCS(EdgeSet(oracle.shrink(grown, protect=1 << e), g.n_edges))


def minimal_transversals(sets: list[int]):
    """Yield every inclusion-minimal edge set meeting each of ``sets`` (bitmasks).

    Depth-first search that branches on the uncovered set with the fewest
    candidate elements and keeps only partial solutions in which every
    chosen element is still the sole hitter of some set.
    """
    if any(s == 0 for s in sets):
        return
    hits: dict[int, int] = {}
    for i, s in enumerate(sets):
        for e in iter_bits(s):
            hits[e] = hits.get(e, 0) | 1 << i
    chosen: list[int] = []
    crit: dict[int, int] = {}

    def rec(cand: int, uncov: int, sol: int):
        if not uncov:
            yield sol
            return
        best_i, best_c, best_n = -1, 0, 1 << 30
        rem = uncov
        while rem:
            low = rem & -rem
            rem ^= low
            i = low.bit_length() - 1
            c = sets[i] & cand
            n = c.bit_count()
            if n < best_n:
                best_i, best_c, best_n = i, c, n
                if n <= 1:
                    break
        if best_n == 0:
            return
        cand &= ~best_c
        for e in iter_bits(best_c):
            he = hits[e]
            saved = [(f, crit[f]) for f in chosen]
            ok = True
            for f in chosen:
                crit[f] &= ~he
                if not crit[f]:
                    ok = False
            if ok:
                crit[e] = uncov & he
                chosen.append(e)
                yield from rec(cand, uncov & ~he, sol | 1 << e)
                chosen.pop()
                del crit[e]
            for f, c in saved:
                crit[f] = c
            cand |= 1 << e

    universe = 0
    for s in sets:
        universe |= s
    yield from rec(universe, (1 << len(sets)) - 1, 0)


def decompose(g: Graph, mcs_bits: list[int], complete: bool = True, oracle_calls: int = 0,
              correction_sets: list[int] | None = None) -> Decomposition:
    m = g.n_edges
    mcs_bits = sorted(set(mcs_bits), key=lambda b: tuple(iter_bits(b)))
    m_g = 0
    for b in mcs_bits:
        m_g |= b
    touch = 0
    for v in g.vertices_of(m_g):
        touch |= g.incident_bits[v]
    c_g = touch & ~m_g
    b_g = ((1 << m) - 1) & ~m_g & ~c_g
    return Decomposition(g, [MCS(EdgeSet(b, m)) for b in mcs_bits], EdgeSet(m_g, m),
                         EdgeSet(c_g, m), EdgeSet(b_g, m), complete, oracle_calls,
                         sorted(correction_sets or []))


def enumerate_all_mcs(g: Graph, oracle: ColouringOracle | None = None,
                      budget: int = DEFAULT_BUDGET) -> Decomposition:
    """Every minimal conflicting subgraph of ``g``, found by hitting-set duality.

    Invariant: an MCS not yet found contains none of the found ones, so it
    survives the deletion of some minimal transversal T of the found family.
    Each pass therefore walks the minimal transversals T and tests E - T:
    a conflicting remainder is shrunk to a new MCS; a colourable one marks T
    as a minimal deletion set and is remembered. A pass that discovers
    nothing proves the list complete.

    ``budget`` caps oracle calls; on overrun the partial result comes back
    with ``complete=False``.
    """
    oracle = oracle or ColouringOracle(g)
    start = oracle.calls
    full = g.all_edges().bits
    if oracle.is_colourable(full):
        return decompose(g, [], True, oracle.calls - start)
    found: list[int] = [oracle.shrink(full)]
    colourable: set[int] = set()
    complete = True
    try:
        while True:
            discovered = False
            for t in minimal_transversals(list(found)):
                if t in colourable:
                    continue
                rest = full & ~t
                if any(f & rest == f for f in found):
                    continue
                if oracle.calls - start > budget:
                    raise BudgetExceeded
                if oracle.is_colourable(rest):
                    colourable.add(t)
                    continue
                found.append(oracle.shrink(rest, known=found))
                discovered = True
                log.debug("%s: MCS #%d found", g.name or "graph", len(found))
            if not discovered:
                break
    except BudgetExceeded:
        complete = False
        log.warning("%s: MCS enumeration stopped after %d oracle calls", g.name or "graph",
                    oracle.calls - start)
    return decompose(g, found, complete, oracle.calls - start, sorted(colourable))


def brute_force_mcs(g: Graph, is_colourable) -> list[int]:
    """All MCSs by exhaustive subset scan (small graphs only).

    Subsets are visited by increasing size; a subset is conflicting if one
    of its single-edge deletions is, otherwise ``is_colourable`` decides.
    The MCSs are the conflicting subsets all of whose single-edge deletions
    are colourable.
    """
    m = g.n_edges
    if m > 20:
        raise ValueError(f"brute force over 2^{m} subsets refused")
    conflicting = bytearray(1 << m)
    out = []
    for size in range(m + 1):
        for bits in _subsets_of_size(m, size):
            if any(conflicting[bits & ~(1 << e)] for e in iter_bits(bits)):
                conflicting[bits] = 1
            elif not is_colourable(bits):
                conflicting[bits] = 1
                out.append(bits)
    return sorted(out, key=lambda b: tuple(iter_bits(b)))


def _subsets_of_size(m: int, k: int):
    if k == 0:
        yield 0
        return
    bits = (1 << k) - 1
    limit = 1 << m
    while bits < limit:
        yield bits
        low = bits & -bits
        ripple = bits + low
        bits = (((ripple ^ bits) >> 2) // low) | ripple
