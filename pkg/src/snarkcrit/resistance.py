"""Resistance, minimum hitting sets of the MCS family, and the critical subgraph.

The critical subgraph is computed twice: once as the union of colour-0
classes over minimal colourings, once as the union of minimum hitting sets
of the MCS family. :func:`verify_hitting_theorems` checks that the two
agree, together with the other consequences of the hitting-set
characterisation of resistance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .colouring import ColouringOracle, MinimalColouring
from .criticality import ContractError, Decomposition, enumerate_all_mcs
from .graph import EdgeSet, Graph, iter_bits


class IncompleteInput(ContractError):
    """The MCS enumeration was truncated, so exact answers are unavailable."""


@dataclass(frozen=True)
class ResistanceResult:
    r: int
    r_v: int
    witness_deletion: EdgeSet
    witness_vertices: tuple[int, ...]


@dataclass(frozen=True)
class HittingSet:
    edges: EdgeSet


@dataclass(frozen=True)
class CriticalSubgraph:
    edges: EdgeSet


def resistance(g: Graph, oracle: ColouringOracle | None = None) -> ResistanceResult:
    """Edge and vertex resistance by iterative deepening over deletion sets.

    Deleted edges are restricted to matchings (a colour class is always a
    matching); deleted vertices are arbitrary. For each k = 0, 1, ... the
    search branches on a conflicting core of what is left, since every
    valid deletion set must touch each core.
    """
    g.require_subcubic()
    oracle = oracle or ColouringOracle(g)
    cores: list[int] = []
    r = wd = None
    for k in range(g.n_edges + 1):
        found = oracle.colourable_deletions(k, first_only=True, cores=cores)
        if found:
            r, wd = k, found[0]
            break
    r_v = wv = None
    for k in range(g.n_vertices + 1):
        found = oracle.colourable_deletions(k, vertex_mode=True, first_only=True, cores=cores)
        if found:
            r_v, wv = k, found[0]
            break
    assert r is not None and r_v is not None and wd is not None and wv is not None
    return ResistanceResult(r, r_v, EdgeSet(wd, g.n_edges), tuple(iter_bits(wv)))


def _require_complete(decomp: Decomposition) -> None:
    if not decomp.complete:
        raise IncompleteInput("MCS enumeration is incomplete (budget exceeded)")


def _lower_bound(sets: list[int], uncovered: int) -> int:
    """Size of a greedy family of pairwise disjoint uncovered sets."""
    used = 0
    count = 0
    for i in iter_bits(uncovered):
        if not sets[i] & used:
            used |= sets[i]
            count += 1
    return count


def min_hitting_sets(decomp: Decomposition) -> tuple[int, list[HittingSet]]:
    """Minimum size of an edge set meeting every MCS, and all sets of that size.

    Branch and bound: branch on the uncovered MCS with the fewest usable
    edges; an edge already tried at a node is barred from its later
    siblings, so no set is produced twice. The first sweep finds the
    optimum, the second collects every set at that size.
    """
    _require_complete(decomp)
    m = decomp.graph.n_edges
    sets = sorted(decomp.mcs_bits, key=lambda b: (b.bit_count(), b))
    if not sets:
        return 0, [HittingSet(EdgeSet(0, m))]
    hits: dict[int, int] = {}
    for i, s in enumerate(sets):
        for e in iter_bits(s):
            hits[e] = hits.get(e, 0) | 1 << i
    everything = (1 << len(sets)) - 1
    best = [len(sets)]
    collected: list[int] = []

    def rec(chosen: int, size: int, uncovered: int, allowed: int, collect: bool) -> None:
        if not uncovered:
            if collect:
                collected.append(chosen)
            elif size < best[0]:
                best[0] = size
            return
        limit = best[0] if collect else best[0] - 1
        if size + _lower_bound(sets, uncovered) > limit:
            return
        pick, pick_n = -1, 1 << 30
        for i in iter_bits(uncovered):
            n = (sets[i] & allowed).bit_count()
            if n < pick_n:
                pick, pick_n = i, n
        for e in iter_bits(sets[pick] & allowed):
            allowed &= ~(1 << e)
            rec(chosen | 1 << e, size + 1, uncovered & ~hits[e], allowed, collect)

    universe = 0
    for s in sets:
        universe |= s
    rec(0, 0, everything, universe, False)
    rec(0, 0, everything, universe, True)
    collected.sort(key=lambda b: tuple(iter_bits(b)))
    return best[0], [HittingSet(EdgeSet(b, m)) for b in collected]


def critical_subgraph_via_hitting(decomp: Decomposition) -> CriticalSubgraph:
    """Union of all minimum hitting sets of the MCS family."""
    _, sets = min_hitting_sets(decomp)
    bits = 0
    for h in sets:
        bits |= h.edges.bits
    return CriticalSubgraph(EdgeSet(bits, decomp.graph.n_edges))


def critical_subgraph_via_colourings(g: Graph, r: int, oracle: ColouringOracle | None = None,
                                     cap: int = 0) -> tuple[CriticalSubgraph, bool, list[MinimalColouring]]:
    """Union of colour-0 classes over minimal colourings, straight from the definition.

    Returns ``(critical, complete, colourings)``; ``complete`` is false when
    ``cap`` cut the enumeration short.
    """
    oracle = oracle or ColouringOracle(g)
    if r == 0:
        return CriticalSubgraph(EdgeSet(0, g.n_edges)), True, oracle.enumerate_minimal_colourings(0, 1)
    cols = oracle.enumerate_minimal_colourings(r, cap)
    bits = 0
    for mc in cols:
        bits |= mc.conflict_set.bits
    complete = not cap or len(cols) < cap
    return CriticalSubgraph(EdgeSet(bits, g.n_edges)), complete, cols


@dataclass
class Check:
    """One pass/fail verdict with a certificate explaining it."""

    name: str
    passed: bool
    applicable: bool = True
    detail: str = ""
    certificate: Any = None

    def as_dict(self) -> dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "applicable": self.applicable,
                "detail": self.detail, "certificate": self.certificate}


@dataclass
class Verdict:
    checks: list[Check] = field(default_factory=list)
    refused: str | None = None

    @property
    def passed(self) -> bool:
        return self.refused is None and all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self) -> dict[str, Any]:
        return {"passed": self.passed, "refused": self.refused,
                "checks": [c.as_dict() for c in self.checks]}


def verify_hitting_theorems(g: Graph, oracle: ColouringOracle | None = None,
                            decomp: Decomposition | None = None,
                            res: ResistanceResult | None = None,
                            colouring_cap: int = 0,
                            hitting: tuple[int, list[HittingSet]] | None = None,
                            via_colourings: tuple[CriticalSubgraph, bool, list[MinimalColouring]] | None = None,
                            ) -> Verdict:
    """Machine-check the hitting-set characterisation of resistance and K_G on ``g``.

    (a) resistance equals the minimum hitting-set size;
    (b) deleting any minimum hitting set leaves a 3-colourable graph;
    (c) K_G from minimal colourings equals the union of minimum hitting sets;
    (d) each colour-0 edge of each minimal colouring lies in an MCS that
        contains no other colour-0 edge of that colouring;
    (e) if the MCSs are pairwise edge-disjoint, resistance equals their number.

    ``hitting`` and ``via_colourings`` accept results already computed by
    :func:`min_hitting_sets` and :func:`critical_subgraph_via_colourings`.
    """
    oracle = oracle or ColouringOracle(g)
    decomp = decomp or enumerate_all_mcs(g, oracle)
    if not decomp.complete:
        return Verdict(refused="MCS enumeration incomplete")
    res = res or resistance(g, oracle)
    size, min_sets = hitting or min_hitting_sets(decomp)
    k_bits = 0
    for h in min_sets:
        k_bits |= h.edges.bits
    k_hit = CriticalSubgraph(EdgeSet(k_bits, g.n_edges))
    k_col, col_complete, cols = via_colourings or critical_subgraph_via_colourings(g, res.r, oracle, colouring_cap)
    if not col_complete:
        return Verdict(refused="minimal-colouring enumeration hit its cap")
    full = g.all_edges().bits
    checks = []

    checks.append(Check("a_resistance_is_min_hitting", res.r == size,
                        detail=f"r={res.r}, min hitting size={size}",
                        certificate={"r": res.r, "min_hitting_size": size,
                                     "witness_deletion": res.witness_deletion.indices()}))

    bad_b = [h.edges.indices() for h in min_sets
             if decomp.mcs_list and not oracle.is_colourable(full & ~h.edges.bits)]
    checks.append(Check("b_hitting_set_deletion_colourable", not bad_b,
                        detail=f"{len(min_sets)} minimum hitting sets tested",
                        certificate={"failing_sets": bad_b[:10]}))

    checks.append(Check("c_critical_routes_agree", k_hit.edges == k_col.edges,
                        detail=f"|K_G| via hitting={len(k_hit.edges)}, via colourings={len(k_col.edges)}",
                        certificate={"only_hitting": (k_hit.edges - k_col.edges).indices(),
                                     "only_colourings": (k_col.edges - k_hit.edges).indices()}))

    bad_d = []
    mcs_bits = decomp.mcs_bits
    for mc in cols:
        conflict = mc.conflict_set.bits
        for e in iter_bits(conflict):
            others = conflict & ~(1 << e)
            if not any(b >> e & 1 and not b & others for b in mcs_bits):
                bad_d.append({"conflict_set": mc.conflict_set.indices(), "edge": e})
    checks.append(Check("d_private_mcs_per_conflict_edge", not bad_d,
                        applicable=bool(cols) and res.r > 0,
                        detail=f"{len(cols)} minimal colourings tested",
                        certificate={"violations": bad_d[:10]}))

    disjoint = all(not a & b for i, a in enumerate(mcs_bits) for b in mcs_bits[i + 1:])
    applies_e = disjoint and bool(mcs_bits)
    checks.append(Check("e_disjoint_mcs_count", (not applies_e) or res.r == len(mcs_bits),
                        applicable=applies_e,
                        detail=f"pairwise disjoint={disjoint}, r={res.r}, |M|={len(mcs_bits)}",
                        certificate={"r": res.r, "mcs_count": len(mcs_bits)}))
    return Verdict(checks)
