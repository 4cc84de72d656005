from __future__ import annotations

from functools import lru_cache

import pytest

from snarkcrit.colouring import ColouringOracle
from snarkcrit.criticality import enumerate_all_mcs
from snarkcrit.generators import generate
from snarkcrit.resistance import resistance

CORPUS = {
    "k4": ("k4", None), "k33": ("k33", None), "prism": ("prism", None),
    "petersen": ("petersen", None), "flower5": ("flower", 5), "flower7": ("flower", 7),
    "example1": ("fixture_example1", None), "example2": ("fixture_example2", None),
}

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def graph(name: str):
    if name.startswith("chain"):
        return generate("chain_cluster", int(name[5:]))
    family, param = CORPUS[name]
    return generate(family, param)


@lru_cache(maxsize=None)
def solved(name: str):
    """(graph, oracle, decomposition, resistance) shared across the session."""
    g = graph(name)
    oracle = ColouringOracle(g)
    return g, oracle, enumerate_all_mcs(g, oracle), resistance(g, oracle)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(number: int, checks: dict[str, bool], seconds: float, limit: float | None = None):
        timed_ok = limit is None or seconds < limit
        ok = all(checks.values()) and timed_ok
        failed = [k for k, v in checks.items() if not v]
        if not timed_ok:
            failed.append(f"time {seconds:.1f}s >= {limit}s")
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'} ({seconds:.1f}s)"
        if failed:
            line += " failed: " + "; ".join(failed)
        print(line)
        ACCEPTANCE_LINES.append(line)
        return ok
    return record
