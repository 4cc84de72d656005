"""Full-pipeline analysis of one graph, its JSON report and a DOT rendering."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field, fields
from typing import Any

from .colouring import ColouringOracle
from .criticality import DEFAULT_BUDGET, disjoint_pairs_separated, enumerate_all_mcs, mcs_invariants
from .graph import EdgeSet, Graph, bridges
from .resistance import critical_subgraph_via_colourings, min_hitting_sets, resistance, verify_hitting_theorems
from .structure import DomainError, check_conjectures, clusters, is_hypohamiltonian, oddness

SCHEMA = 1
SKIPPABLE = ("oddness", "hypo", "clusters")

EXIT_OK, EXIT_INPUT, EXIT_INCOMPLETE, EXIT_VIOLATION = 0, 1, 2, 3


@dataclass
class AnalysisReport:
    """Everything computed about one graph, in JSON-ready form.

    Edge sets are sorted lists of edge indices into ``graph["edges"]``.
    Optional stages left out by ``skip`` (or undefined for the input, such
    as oddness of a non-cubic graph) are ``None``.
    """

    schema: int
    graph: dict[str, Any]
    complete: bool
    oracle_calls: int
    graph_class: str
    r: int
    r_v: int
    r_class0: int
    witness_deletion: list[int]
    witness_vertices: list[int]
    mcs_count: int | None
    mcs: list[list[int]] | None
    m_g: list[int] | None
    c_g: list[int] | None
    b_g: list[int] | None
    k_g: list[int] | None
    k_g_via_colourings: list[int] | None
    min_hitting_size: int | None
    min_hitting_sets: list[list[int]] | None
    clusters: list[dict[str, Any]] | None
    omega: int | None
    odd_cycles: list[list[int]] | None
    hypohamiltonian: bool | None
    invariant_violations: list[dict[str, Any]]
    theorems: dict[str, Any] | None
    conjectures: dict[str, Any] | None
    timings: dict[str, float] | None = None

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["class"] = d.pop("graph_class")
        if d["timings"] is None:
            del d["timings"]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> AnalysisReport:
        data = dict(data)
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        data["graph_class"] = data.pop("class")
        names = {f.name for f in fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise ValueError(f"unknown report fields: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> AnalysisReport:
        return cls.from_dict(json.loads(text))

    @property
    def proposition_failures(self) -> list[str]:
        """Names of failed checks that are theorems or propositions, not conjectures."""
        out = [f"invariant:{v['check']}" for v in self.invariant_violations]
        if self.theorems:
            out += [c["name"] for c in self.theorems["checks"] if not c["passed"]]
        if self.conjectures:
            out += [c["name"] for c in self.conjectures["checks"]
                    if not c["passed"] and c["certificate"].get("grade") == "proposition"]
        return out

    @property
    def conjecture_candidates(self) -> list[str]:
        if not self.conjectures:
            return []
        return [c["name"] for c in self.conjectures["checks"]
                if not c["passed"] and c["certificate"].get("grade") == "conjecture"]

    @property
    def exit_code(self) -> int:
        if self.proposition_failures:
            return EXIT_VIOLATION
        if not self.complete:
            return EXIT_INCOMPLETE
        return EXIT_OK


class _Clock:
    def __init__(self) -> None:
        self.marks: dict[str, float] = {}

    def stage(self, name: str):
        clock = self

        class _Stage:
            def __enter__(self):
                self.t = time.perf_counter()

            def __exit__(self, *exc):
                clock.marks[name] = round(time.perf_counter() - self.t, 6)

        return _Stage()


def analyze(g: Graph, budget: int = DEFAULT_BUDGET, skip: tuple[str, ...] | frozenset[str] = (),
            timings: bool = False, colouring_cap: int = 0) -> AnalysisReport:
    """Run every analysis on ``g``; stages named in ``skip`` are left out."""
    unknown = set(skip) - set(SKIPPABLE)
    if unknown:
        raise ValueError(f"cannot skip {sorted(unknown)}; choose from {', '.join(SKIPPABLE)}")
    g.require_subcubic()
    oracle = ColouringOracle(g)
    clock = _Clock()
    violations: list[dict[str, Any]] = []

    with clock.stage("resistance"):
        res = resistance(g, oracle)
        r_class0 = len(oracle.min_class0_colouring().conflict_set)
    if r_class0 != res.r:
        violations.append({"check": "resistance_readings_agree", "r": res.r, "r_class0": r_class0})
    if res.r != res.r_v:
        violations.append({"check": "edge_vertex_resistance_agree", "r": res.r, "r_v": res.r_v})

    with clock.stage("mcs"):
        calls_before = oracle.calls
        decomp = enumerate_all_mcs(g, oracle, budget)
        calls = oracle.calls - calls_before
    with clock.stage("invariants"):
        for i, mcs in enumerate(decomp.mcs_list):
            for name, ok in mcs_invariants(g, mcs.bits, oracle).items():
                if not ok:
                    violations.append({"check": name, "mcs": i})
        for i, j in disjoint_pairs_separated(g, decomp.mcs_bits):
            violations.append({"check": "disjoint_mcs_vertex_disjoint", "mcs": [i, j]})

    omega = odd_cycles = None
    if "oddness" not in skip and g.is_cubic() and not bridges(g, g.all_edges().bits):
        with clock.stage("oddness"):
            try:
                odd = oddness(g)
                omega, odd_cycles = odd.omega, [list(c) for c in odd.odd_components]
            except DomainError:
                pass
    hypo = None
    if "hypo" not in skip:
        with clock.stage("hypo"):
            hypo = is_hypohamiltonian(g)

    report = dict(
        mcs_count=None, mcs=None, m_g=None, c_g=None, b_g=None, k_g=None, k_g_via_colourings=None,
        min_hitting_size=None, min_hitting_sets=None, clusters=None, theorems=None, conjectures=None,
    )
    if decomp.complete:
        with clock.stage("hitting"):
            size, sets = min_hitting_sets(decomp)
            k_bits = 0
            for h in sets:
                k_bits |= h.edges.bits
            k_set = EdgeSet(k_bits, g.n_edges)
        with clock.stage("colourings"):
            via_col = critical_subgraph_via_colourings(g, res.r, oracle, colouring_cap)
        with clock.stage("theorems"):
            verdict = verify_hitting_theorems(g, oracle, decomp, res, colouring_cap,
                                              hitting=(size, sets), via_colourings=via_col)
        k_col, col_complete, _ = via_col
        report.update(
            mcs_count=len(decomp.mcs_list),
            mcs=[m.indices() for m in decomp.mcs_list],
            m_g=decomp.m_g.indices(), c_g=decomp.c_g.indices(), b_g=decomp.b_g.indices(),
            k_g=k_set.indices(),
            k_g_via_colourings=k_col.edges.indices() if col_complete else None,
            min_hitting_size=size, min_hitting_sets=[h.edges.indices() for h in sets],
            theorems=verdict.as_dict(),
        )
        if "clusters" not in skip:
            with clock.stage("clusters"):
                cl = clusters(decomp)
                conj = check_conjectures(g, decomp, res, omega=omega, cluster_list=cl,
                                         k_g=k_set,
                                         skip_oddness="oddness" in skip)
            report["clusters"] = [{"members": list(c.members), "kind": c.kind,
                                   "edges": c.edges.indices()} for c in cl]
            report["conjectures"] = conj.as_dict()

    return AnalysisReport(
        schema=SCHEMA,
        graph={"name": g.name, "n": g.n_vertices, "m": g.n_edges, "cubic": g.is_cubic(),
               "edges": [list(e) for e in g.edges]},
        complete=decomp.complete,
        oracle_calls=calls,
        graph_class="one" if res.r == 0 else "two",
        r=res.r, r_v=res.r_v, r_class0=r_class0,
        witness_deletion=res.witness_deletion.indices(),
        witness_vertices=list(res.witness_vertices),
        omega=omega, odd_cycles=odd_cycles, hypohamiltonian=hypo,
        invariant_violations=violations,
        timings=clock.marks if timings else None,
        **report,
    )


def to_dot(report: AnalysisReport) -> str:
    """DOT text with M_G bold, C_G dashed, B_G gray and K_G in red."""
    g = report.graph
    m_g = set(report.m_g or [])
    c_g = set(report.c_g or [])
    k_g = set(report.k_g or [])
    name = (g["name"] or "G").replace('"', "'")
    lines = [f'graph "{name}" {{', "  node [shape=circle, fontsize=10];"]
    lines += [f"  {v};" for v in range(g["n"])]
    for i, (u, v) in enumerate(g["edges"]):
        if report.m_g is None:
            attrs = ["style=solid"]
        elif i in m_g:
            attrs = ["style=bold", "penwidth=2.5"]
        elif i in c_g:
            attrs = ["style=dashed"]
        else:
            attrs = ["color=gray"]
        if i in k_g:
            attrs.append("color=red")
        lines.append(f'  {u} -- {v} [{", ".join(attrs)}, label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
