"""Clusters of MCSs, oddness, hypo-Hamiltonicity and the conjecture harness."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .colouring import ColouringOracle
from .criticality import ContractError, Decomposition, enumerate_all_mcs
from .generators import chain_cluster
from .graph import EdgeSet, Graph, bridges, iter_bits
from .resistance import Check, ResistanceResult, Verdict, critical_subgraph_via_hitting, min_hitting_sets, resistance

KINDS = ("singleton", "dense", "densely_sparse", "sparse")


class DomainError(ValueError):
    """Input outside the domain where the quantity is defined."""


@dataclass(frozen=True)
class Cluster:
    members: tuple[int, ...]
    kind: str
    edges: EdgeSet

    def is_cubic(self, g: Graph) -> bool:
        """True when every vertex of the cluster's edge union has degree 3 in it."""
        return all(d == 3 for d in g.degrees_within(self.edges).values())


def classify(member_bits: list[int]) -> str:
    if len(member_bits) == 1:
        return "singleton"
    common = member_bits[0]
    for b in member_bits[1:]:
        common &= b
    if common:
        return "dense"
    pairwise = all(a & b for i, a in enumerate(member_bits) for b in member_bits[i + 1:])
    return "densely_sparse" if pairwise else "sparse"


def clusters(decomp: Decomposition) -> list[Cluster]:
    """Connected components of the edge-intersection graph on the MCSs, each classified."""
    if not decomp.complete:
        raise ContractError("clusters need a complete MCS enumeration")
    sets = decomp.mcs_bits
    m = decomp.graph.n_edges
    seen = [False] * len(sets)
    out = []
    for start in range(len(sets)):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        for i in comp:
            for j in range(len(sets)):
                if not seen[j] and sets[i] & sets[j]:
                    seen[j] = True
                    comp.append(j)
        comp.sort()
        union = 0
        for i in comp:
            union |= sets[i]
        out.append(Cluster(tuple(comp), classify([sets[i] for i in comp]), EdgeSet(union, m)))
    return out


@dataclass(frozen=True)
class OddnessResult:
    omega: int
    witness_two_factor: EdgeSet
    odd_components: tuple[tuple[int, ...], ...]


def perfect_matchings(g: Graph):
    """Yield perfect matchings as edge bitmasks, in canonical order.

    The lowest unmatched vertex is always matched next, trying its
    neighbours in edge-index order.
    """
    adj = g.adjacency
    n = g.n_vertices
    matched = [False] * n

    def rec(v: int, bits: int):
        while v < n and matched[v]:
            v += 1
        if v == n:
            yield bits
            return
        matched[v] = True
        for w, e in adj[v]:
            if not matched[w]:
                matched[w] = True
                yield from rec(v + 1, bits | 1 << e)
                matched[w] = False
        matched[v] = False

    if n % 2 == 0:
        yield from rec(0, 0)


def cycles_of(g: Graph, bits: int) -> list[tuple[int, ...]]:
    """Cycles of a 2-regular edge set, each listed from its lowest vertex."""
    nb: dict[int, list[int]] = {}
    for e in iter_bits(bits):
        u, v = g.edges[e]
        nb.setdefault(u, []).append(v)
        nb.setdefault(v, []).append(u)
    seen: set[int] = set()
    out = []
    for s in sorted(nb):
        if s in seen:
            continue
        cyc = [s]
        seen.add(s)
        prev, cur = s, min(nb[s])
        while cur != s:
            cyc.append(cur)
            seen.add(cur)
            a, b = nb[cur]
            prev, cur = cur, (b if a == prev else a)
        out.append(tuple(cyc))
    return out


def oddness(g: Graph) -> OddnessResult:
    """Fewest odd cycles over the 2-factors of a cubic bridgeless graph.

    2-factors are the complements of perfect matchings; the witness is the
    first minimiser in canonical matching order.
    """
    if not g.is_cubic():
        raise DomainError(f"oddness needs a cubic graph; {g!r} is not")
    if bridges(g, g.all_edges().bits):
        raise DomainError(f"oddness needs a bridgeless graph; {g!r} has a bridge")
    full = g.all_edges().bits
    best: tuple[int, int, list[tuple[int, ...]]] | None = None
    for pm in perfect_matchings(g):
        factor = full & ~pm
        odd = [c for c in cycles_of(g, factor) if len(c) % 2]
        if best is None or len(odd) < best[0]:
            best = (len(odd), factor, odd)
            if not odd:
                break
    if best is None:
        raise DomainError(f"{g!r} has no perfect matching")
    return OddnessResult(best[0], EdgeSet(best[1], g.n_edges), tuple(best[2]))


def hamiltonian_cycle(g: Graph, removed: int = 0) -> list[int] | None:
    """A Hamiltonian cycle of ``g`` minus the vertex set ``removed`` (bitmask), or None.

    Depth-first path extension from the lowest remaining vertex. A branch
    is cut when some unvisited vertex has fewer than two usable neighbours
    or the unvisited vertices and the path end are no longer connected.
    """
    nbr = [0] * g.n_vertices
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    alive = ((1 << g.n_vertices) - 1) & ~removed
    nbr = [b & alive for b in nbr]
    count = alive.bit_count()
    if count < 3:
        return None
    start = (alive & -alive).bit_length() - 1
    path = [start]

    def viable(unvisited: int, end: int) -> bool:
        ends = unvisited | 1 << end | 1 << start
        for v in iter_bits(unvisited):
            if (nbr[v] & ends).bit_count() < 2:
                return False
        reach = frontier = 1 << end
        scope = unvisited | 1 << end
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= nbr[v]
            frontier = grow & scope & ~reach
            reach |= frontier
        return reach & unvisited == unvisited

    def rec(end: int, unvisited: int) -> bool:
        if not unvisited:
            return bool(nbr[end] >> start & 1)
        if not viable(unvisited, end):
            return False
        for w in iter_bits(nbr[end] & unvisited):
            path.append(w)
            if rec(w, unvisited & ~(1 << w)):
                return True
            path.pop()
        return False

    return list(path) if rec(start, alive & ~(1 << start)) else None


def is_hamiltonian(g: Graph) -> bool:
    return hamiltonian_cycle(g) is not None


def is_hypohamiltonian(g: Graph) -> bool:
    """No Hamiltonian cycle, but one in every vertex-deleted subgraph."""
    # vertex-deleted checks usually fail or succeed fast, so they go first
    for v in range(g.n_vertices):
        if hamiltonian_cycle(g, 1 << v) is None:
            return False
    return not is_hamiltonian(g)


def check_conjectures(g: Graph, decomp: Decomposition, res: ResistanceResult,
                      omega: int | None = None, cluster_list: list[Cluster] | None = None,
                      k_g: EdgeSet | None = None, skip_oddness: bool = False) -> Verdict:
    """Evaluate the cluster propositions and the two conjectures on one graph.

    (a) empty buffer, cubic bridgeless: omega <= 2r (conjecture);
    (b) bridgeless cubic: K_G = E iff r = 2 and the MCSs form one densely
        sparse cluster (conjecture);
    (c) cubic: no cluster whose edge union is cubic is dense (proposition);
    (d) bridgeless cubic with M_G = E: exactly one cluster, sparse (proposition).
    A failing proposition check is refutation grade; a failing conjecture
    check is a counterexample candidate. With ``skip_oddness`` and no
    ``omega`` given, (a) is reported as not applicable.
    """
    if not decomp.complete:
        return Verdict(refused="MCS enumeration incomplete")
    full = g.all_edges()
    cubic = g.is_cubic()
    bridgeless = cubic and not bridges(g, full.bits)
    cl = clusters(decomp) if cluster_list is None else cluster_list
    if k_g is None:
        k_g = critical_subgraph_via_hitting(decomp).edges
    kinds = [c.kind for c in cl]
    checks = []

    applies_a = bridgeless and res.r > 0 and not decomp.b_g
    if applies_a and omega is None and skip_oddness:
        applies_a = False
    elif applies_a and omega is None:
        omega = oddness(g).omega
    checks.append(Check("a_oddness_at_most_twice_resistance",
                        (not applies_a) or omega <= 2 * res.r, applicable=applies_a,
                        detail=f"omega={omega}, r={res.r}, |B_G|={len(decomp.b_g)}",
                        certificate={"omega": omega, "r": res.r, "grade": "conjecture"}))

    lhs = k_g == full
    rhs = res.r == 2 and kinds == ["densely_sparse"]
    checks.append(Check("b_full_critical_iff_densely_sparse", (not bridgeless) or lhs == rhs,
                        applicable=bridgeless,
                        detail=f"K_G=E: {lhs}; r=2 and one densely sparse cluster: {rhs}",
                        certificate={"k_g_is_e": lhs, "r": res.r, "kinds": kinds, "grade": "conjecture"}))

    dense_cubic = [list(c.members) for c in cl if c.kind == "dense" and c.is_cubic(g)]
    checks.append(Check("c_no_cubic_dense_cluster", not dense_cubic, applicable=cubic,
                        detail=f"{kinds.count('dense')} dense clusters",
                        certificate={"violations": dense_cubic, "grade": "proposition"}))

    applies_d = bridgeless and decomp.m_g == full
    checks.append(Check("d_full_mcs_union_single_sparse", (not applies_d) or kinds in (["sparse"], ["densely_sparse"]),
                        applicable=applies_d,
                        detail=f"M_G=E: {decomp.m_g == full}; cluster kinds {kinds}",
                        certificate={"kinds": kinds, "grade": "proposition"}))
    return Verdict(checks)


@dataclass
class CensusReport:
    n: int
    mcs_count: int
    kinds: list[str]
    r: int
    min_hitting_size: int
    k_g: list[int]
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def as_dict(self) -> dict[str, Any]:
        return {"n": self.n, "mcs_count": self.mcs_count, "kinds": self.kinds, "r": self.r,
                "min_hitting_size": self.min_hitting_size, "k_g": self.k_g, "checks": self.checks}


def chain_cluster_census(n: int) -> CensusReport:
    """Analyse the n-gadget chain and check its expected cluster shape."""
    g = chain_cluster(n)
    oracle = ColouringOracle(g)
    decomp = enumerate_all_mcs(g, oracle)
    if not decomp.complete:
        raise ContractError(f"chain_cluster({n}) enumeration incomplete")
    res = resistance(g, oracle)
    size, _ = min_hitting_sets(decomp)
    kinds = [c.kind for c in clusters(decomp)]
    expected = "singleton" if n == 1 else "dense" if n == 2 else "sparse"
    checks = {
        "mcs_count": len(decomp.mcs_list) == n,
        "one_cluster": len(kinds) == 1,
        "kind": kinds == [expected],
        "resistance_is_hitting_size": res.r == size,
    }
    k_g = critical_subgraph_via_hitting(decomp).edges.indices()
    return CensusReport(n, len(decomp.mcs_list), kinds, res.r, size, k_g, checks)
