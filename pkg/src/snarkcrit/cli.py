"""Command-line front end: ``snarkcrit analyze | dot | suite``."""

from __future__ import annotations

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from pathlib import Path

from .analysis import (EXIT_INCOMPLETE, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, SKIPPABLE, AnalysisReport,
                       analyze, to_dot)
from .criticality import DEFAULT_BUDGET
from .graph import GraphError
from .io import GraphFormatError, read_graph

log = logging.getLogger("snarkcrit")

GRAPH_SUFFIXES = (".g6", ".graph6", ".edges", ".edgelist")


def _skip_list(text: str) -> list[str]:
    items = [s for s in text.split(",") if s]
    for s in items:
        if s not in SKIPPABLE:
            raise argparse.ArgumentTypeError(f"unknown stage {s!r}; choose from {', '.join(SKIPPABLE)}")
    return items


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("g6", "edges"), help="input format (default: by file extension)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help=f"oracle-call budget for MCS enumeration (default {DEFAULT_BUDGET})")
    p.add_argument("--skip", type=_skip_list, action="extend", default=[],
                   help="comma-separated stages to skip: " + ", ".join(SKIPPABLE))
    p.add_argument("--timings", action="store_true",
                   help="include per-stage wall-clock timings (makes output run-dependent)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="snarkcrit", description="Exact resistance and criticality analysis of subcubic graphs.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="run the full pipeline on one graph and emit a JSON report")
    p.add_argument("input", type=Path)
    _add_common(p)
    p.add_argument("--out", type=Path, help="write the JSON report here instead of stdout")
    p.add_argument("--dot", type=Path, help="also write a DOT rendering here")

    p = sub.add_parser("dot", help="emit a DOT rendering with M_G, C_G, B_G and K_G styled")
    p.add_argument("input", type=Path)
    _add_common(p)
    p.add_argument("--out", type=Path, help="write DOT here instead of stdout")

    p = sub.add_parser("suite", help="check theorems and conjectures over a directory of graphs")
    p.add_argument("corpus", type=Path, nargs="?", help="directory of graph files (default: bundled corpus)")
    _add_common(p)
    p.add_argument("--jobs", type=int, default=1, help="graphs analysed in parallel (default 1)")
    p.add_argument("--out", type=Path, help="write the summary table here instead of stdout")
    return parser


def _write(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8")


def _load_and_analyze(path: Path, args: argparse.Namespace) -> AnalysisReport:
    g = read_graph(path, args.format)
    return analyze(g, budget=args.budget, skip=tuple(args.skip), timings=args.timings)


def _report_status(report: AnalysisReport) -> int:
    code = report.exit_code
    if code == EXIT_VIOLATION:
        print(f"invariant violation: {', '.join(report.proposition_failures)}", file=sys.stderr)
    elif code == EXIT_INCOMPLETE:
        print("analysis incomplete: MCS enumeration exceeded its budget", file=sys.stderr)
    return code


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        report = _load_and_analyze(args.input, args)
    except (OSError, GraphFormatError, GraphError) as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _write(report.to_json(), args.out)
    if args.dot:
        args.dot.write_text(to_dot(report), encoding="utf-8")
    return _report_status(report)


def cmd_dot(args: argparse.Namespace) -> int:
    try:
        report = _load_and_analyze(args.input, args)
    except (OSError, GraphFormatError, GraphError) as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _write(to_dot(report), args.out)
    return _report_status(report)


def bundled_corpus() -> Path:
    return Path(str(resources.files("snarkcrit").joinpath("data", "corpus")))


def _suite_row(job: tuple[Path, argparse.Namespace]) -> tuple[str, dict | None, str | None]:
    path, args = job
    try:
        report = _load_and_analyze(path, args)
    except (OSError, GraphFormatError, GraphError) as exc:
        return path.name, None, str(exc)
    return path.name, report.to_dict(), None


COLUMNS = ("graph", "n", "m", "r", "r_v", "mcs", "|K_G|", "clusters", "omega", "theorems", "props", "conjectures", "status")


def format_row(name: str, d: dict | None, error: str | None) -> list[str]:
    if d is None:
        return [name] + ["-"] * (len(COLUMNS) - 2) + [f"error: {error}"]
    report = AnalysisReport.from_dict(d)
    props = report.proposition_failures
    cands = report.conjecture_candidates
    kinds = ",".join(c["kind"] for c in report.clusters) if report.clusters is not None else "-"
    theorems = "-" if report.theorems is None else ("pass" if report.theorems["passed"] else "FAIL")
    status = {EXIT_OK: "ok", EXIT_INCOMPLETE: "incomplete", EXIT_VIOLATION: "VIOLATION"}[report.exit_code]
    return [name, str(report.graph["n"]), str(report.graph["m"]), str(report.r), str(report.r_v),
            "-" if report.mcs_count is None else str(report.mcs_count),
            "-" if report.k_g is None else str(len(report.k_g)),
            kinds or "none", "-" if report.omega is None else str(report.omega), theorems,
            "pass" if not props else "FAIL:" + ",".join(props),
            "pass" if not cands else "candidate:" + ",".join(cands), status]


def cmd_suite(args: argparse.Namespace) -> int:
    corpus = args.corpus or bundled_corpus()
    if not corpus.is_dir():
        print(f"error: {corpus} is not a directory", file=sys.stderr)
        return EXIT_INPUT
    files = sorted(p for p in corpus.iterdir() if p.suffix.lower() in GRAPH_SUFFIXES)
    jobs = [(p, args) for p in files]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_suite_row, jobs))
    else:
        results = [_suite_row(j) for j in jobs]
    rows = [list(COLUMNS)] + [format_row(*res) for res in results]
    widths = [max(len(r[i]) for r in rows) for i in range(len(COLUMNS))]
    text = "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in rows)
    _write(text, args.out)
    code = EXIT_OK
    for name, d, error in results:
        if error is not None:
            log.error("%s: %s", name, error)
            code = max(code, EXIT_INPUT)
        else:
            code = max(code, AnalysisReport.from_dict(d).exit_code)
    return code


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    handler = {"analyze": cmd_analyze, "dot": cmd_dot, "suite": cmd_suite}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
