from __future__ import annotations

import json
import subprocess
import sys

import pytest

from snarkcrit.analysis import AnalysisReport, analyze, to_dot
from snarkcrit.cli import bundled_corpus, main
from snarkcrit.generators import k4, petersen
from snarkcrit.io import emit_edge_list

CORPUS = bundled_corpus()


def test_bundled_corpus_contents():
    names = sorted(p.name for p in CORPUS.iterdir())
    assert names == ["example1.edges", "example2.edges", "flower5.g6", "flower7.g6", "k33.g6", "k4.g6",
                     "petersen.g6", "prism.g6"]


def test_analyze_petersen(tmp_path, capsys):
    out = tmp_path / "p.json"
    assert main(["analyze", str(CORPUS / "petersen.g6"), "--out", str(out)]) == 0
    d = json.loads(out.read_text())
    assert d["schema"] == 1 and d["class"] == "two"
    assert d["r"] == d["r_v"] == 2
    assert d["k_g"] == list(range(15))
    assert [c["kind"] for c in d["clusters"]] == ["densely_sparse"]
    assert d["omega"] == 2 and d["hypohamiltonian"] is True
    assert len(d["graph"]["edges"]) == 15 and d["graph"]["cubic"] is True
    assert "timings" not in d


def test_analyze_k4_stdout(capsys):
    assert main(["analyze", str(CORPUS / "k4.g6")]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["class"] == "one" and d["r"] == 0 and d["mcs"] == []
    assert d["b_g"] == list(range(6))


def test_report_round_trip():
    report = analyze(petersen())
    again = AnalysisReport.from_json(report.to_json())
    assert again == report
    assert again.to_json() == report.to_json()


def test_report_rejects_bad_schema():
    d = analyze(k4()).to_dict()
    d["schema"] = 99
    with pytest.raises(ValueError):
        AnalysisReport.from_dict(d)


def test_edge_lists_sorted():
    d = analyze(petersen()).to_dict()
    for key in ("m_g", "c_g", "b_g", "k_g", "k_g_via_colourings", "witness_deletion"):
        assert d[key] == sorted(d[key])
    assert all(m == sorted(m) for m in d["mcs"])


def test_timings_opt_in():
    report = analyze(k4(), timings=True)
    assert set(report.timings) >= {"resistance", "mcs"}
    assert "timings" in report.to_dict()


def test_skip_stages():
    report = analyze(petersen(), skip=("oddness", "hypo", "clusters"))
    assert report.omega is None and report.hypohamiltonian is None
    assert report.clusters is None and report.conjectures is None
    with pytest.raises(ValueError):
        analyze(petersen(), skip=("everything",))


def test_input_errors_exit_1(tmp_path, capsys):
    bad = tmp_path / "bad.edges"
    bad.write_text("0 1\n0 1\n")
    assert main(["analyze", str(bad)]) == 1
    assert "duplicate edge" in capsys.readouterr().err
    assert main(["analyze", str(tmp_path / "missing.g6")]) == 1
    over = tmp_path / "k5.edges"
    over.write_text("".join(f"{i} {j}\n" for i in range(5) for j in range(i + 1, 5)))
    assert main(["analyze", str(over)]) == 1


def test_incomplete_exit_2(capsys):
    assert main(["analyze", str(CORPUS / "petersen.g6"), "--budget", "3"]) == 2
    d = json.loads(capsys.readouterr().out)
    assert d["complete"] is False and d["k_g"] is None


def test_format_flag(tmp_path, capsys):
    p = tmp_path / "graph.txt"
    p.write_text("C~\n")
    assert main(["analyze", str(p), "--format", "g6", "--skip", "hypo"]) == 0
    assert json.loads(capsys.readouterr().out)["graph"]["m"] == 6


def test_dot_styles(tmp_path, capsys):
    assert main(["dot", str(CORPUS / "k4.g6")]) == 0
    dot = capsys.readouterr().out
    assert dot.startswith('graph "k4"')
    assert dot.count("color=gray") == 6 and "bold" not in dot
    assert main(["dot", str(CORPUS / "petersen.g6")]) == 0
    dot = capsys.readouterr().out
    assert dot.count("style=bold") == 15 and dot.count("color=red") == 15


def test_dot_chain_classes(tmp_path):
    from snarkcrit.generators import chain_cluster
    report = analyze(chain_cluster(1), skip=("hypo",))
    dot = to_dot(report)
    assert dot.count("style=bold") == len(report.m_g)
    assert dot.count("style=dashed") == len(report.c_g)


def test_analyze_writes_dot(tmp_path, capsys):
    out = tmp_path / "k4.dot"
    assert main(["analyze", str(CORPUS / "k4.g6"), "--dot", str(out)]) == 0
    assert out.read_text().startswith("graph")


def test_suite_empty_dir(tmp_path, capsys):
    assert main(["suite", str(tmp_path)]) == 0
    assert capsys.readouterr().out.splitlines()[0].startswith("graph")


def test_suite_small_corpus(tmp_path, capsys):
    for name in ("k4.g6", "petersen.g6", "prism.g6"):
        (tmp_path / name).write_text((CORPUS / name).read_text())
    (tmp_path / "broken.edges").write_text("0 0\n")
    (tmp_path / "notes.md").write_text("ignored")
    code = main(["suite", str(tmp_path), "--jobs", "2"])
    rows = capsys.readouterr().out.splitlines()
    assert len(rows) == 5
    assert code == 1
    assert "error" in rows[1]
    assert rows[3].startswith("petersen.g6") and rows[3].rstrip().endswith("ok")


def test_suite_incomplete_exit_2(tmp_path, capsys):
    (tmp_path / "petersen.g6").write_text((CORPUS / "petersen.g6").read_text())
    assert main(["suite", str(tmp_path), "--budget", "3"]) == 2
    assert "incomplete" in capsys.readouterr().out


def test_suite_not_a_directory(tmp_path):
    assert main(["suite", str(tmp_path / "nope")]) == 1


def test_module_entry_point(tmp_path):
    p = tmp_path / "tri.edges"
    p.write_text(emit_edge_list(k4()))
    run = subprocess.run([sys.executable, "-m", "snarkcrit", "analyze", str(p)], capture_output=True, text=True)
    assert run.returncode == 0
    assert json.loads(run.stdout)["r"] == 0
