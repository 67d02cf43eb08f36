"""Command-line front end.

Exit codes: 0 success or match, 1 mismatch / failed suite, 2 invalid input,
3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from .anchors import anchors_json, reference_anchors
from .checks import SUITES, report_json, run_suite
from .eulerlib import SheafSpec
from .mseries import MultiSeries
from .poincare import (
    DEFAULT_COST_CAP,
    METHODS,
    CostCapExceeded,
    SeriesJob,
    compute,
    geom_series_closed,
    geom_series_def,
)
from .resolution import MAX_LINES, InvalidCenter, ResolutionGraph, build_graph, center_from_json

log = logging.getLogger("geopoincare")

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3
CLI_MAX_LINES = 8

_PRESETS = {
    "omega1": "one-forms",
    "one-forms": "one-forms",
    "structure": "structure-sheaf",
    "structure-sheaf": "structure-sheaf",
    "O": "structure-sheaf",
}


class JobError(ValueError):
    """Invalid job document; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


@dataclass(frozen=True)
class JobDocument:
    graph: ResolutionGraph
    sheaf: SheafSpec
    truncation: int


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_job(doc, max_lines: int = CLI_MAX_LINES) -> JobDocument:
    if not isinstance(doc, dict):
        raise JobError("document", "top level must be a JSON object")
    blowups = doc.get("blowups")
    if not isinstance(blowups, list) or not blowups:
        raise JobError("blowups", "must be a non-empty list")
    if len(blowups) > max_lines:
        raise JobError("blowups", f"at most {max_lines} blow-ups allowed, got {len(blowups)}")
    centers = []
    for pos, entry in enumerate(blowups):
        try:
            centers.append(center_from_json(entry))
        except InvalidCenter as exc:
            raise JobError(f"blowups[{pos}]", str(exc)) from None
    try:
        graph = build_graph(centers)
    except InvalidCenter as exc:
        raise JobError("blowups", str(exc)) from None

    sheaf_doc = doc.get("sheaf")
    if not isinstance(sheaf_doc, dict):
        raise JobError("sheaf", "must be an object with 'preset' or 'rank'/'chern'")
    if "preset" in sheaf_doc:
        tag = _PRESETS.get(sheaf_doc["preset"])
        if tag is None:
            raise JobError("sheaf.preset", f"unknown preset {sheaf_doc['preset']!r}")
        sheaf = SheafSpec.one_forms(graph) if tag == "one-forms" else SheafSpec.structure_sheaf(graph.s)
    else:
        rank, chern = sheaf_doc.get("rank"), sheaf_doc.get("chern")
        if not _is_int(rank) or rank < 1:
            raise JobError("sheaf.rank", f"must be an integer >= 1, got {rank!r}")
        if not isinstance(chern, list) or not all(_is_int(c) for c in chern):
            raise JobError("sheaf.chern", "must be a list of integers")
        if len(chern) != graph.s:
            raise JobError("sheaf.chern", f"needs {graph.s} entries, got {len(chern)}")
        sheaf = SheafSpec(rank, tuple(chern))

    n = doc.get("truncation")
    if not _is_int(n) or n < 0:
        raise JobError("truncation", f"must be a nonnegative integer, got {n!r}")
    return JobDocument(graph, sheaf, n)


def load_job(path: str) -> JobDocument:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise JobError("input", str(exc)) from None
    except json.JSONDecodeError as exc:
        raise JobError("input", f"not valid JSON: {exc}") from None
    return parse_job(doc)


def series_document(series: MultiSeries, method: str) -> dict:
    return {"s": series.s, "box": series.box, "method": method, "terms": series.terms_json()}


def series_from_document(doc: dict) -> MultiSeries:
    return MultiSeries.from_terms_json(doc["s"], doc["box"], doc["terms"])


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _emit(text: str, output) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args) -> int:
    job_doc = load_job(args.input)
    job = SeriesJob(job_doc.graph, job_doc.sheaf, job_doc.truncation, args.cost_cap)
    try:
        series = compute(job, args.method)
    except ValueError as exc:
        raise JobError("method", str(exc)) from None
    if args.format == "json":
        _emit(dumps(series_document(series, args.method)), args.output)
    else:
        _emit(series.to_text() + "\n", args.output)
    return EXIT_OK


def cmd_compare(args) -> int:
    job_doc = load_job(args.input)
    job = SeriesJob(job_doc.graph, job_doc.sheaf, job_doc.truncation, args.cost_cap)
    d, c = geom_series_def(job), geom_series_closed(job)
    diff = d.first_difference(c)
    if diff is None:
        _emit("MATCH\n", args.output)
        return EXIT_OK
    e, a, b = diff
    line = f"MISMATCH at exp {list(e)}: definition={a} closed={b}\n"
    if not job.sheaf.is_preset:
        log.warning("custom sheaf: closed form differs from definition at exp %s (%s vs %s)", list(e), a, b)
        _emit("WARN " + line, args.output)
        return EXIT_OK
    _emit(line, args.output)
    return EXIT_MISMATCH


def cmd_check(args) -> int:
    if not 1 <= args.max_lines <= MAX_LINES:
        raise JobError("max-lines", f"must be in 1..{MAX_LINES}")
    if args.box < 0:
        raise JobError("box", "must be nonnegative")
    report = run_suite(args.suite, args.max_lines, args.box, args.seed, args.workers)
    if args.format == "json":
        _emit(report_json(report), args.output)
    else:
        lines = [
            f"suite {report['suite']}: max_lines={report['max_lines']} box={report['box']} seed={report['seed']}",
            f"instances {report['instances']}, checks {report['checked']}, failures {report['failures']}",
        ]
        for r in report["results"]:
            if r["failures"]:
                lines.append(
                    f"  FAIL #{r['index']} s={r['s']} {json.dumps(r['sequence'])}: "
                    f"{r['failures']} failures, first {json.dumps(r['first_counterexample'], sort_keys=True)}"
                )
        lines.append("PASS" if report["passed"] else "FAIL")
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if report["passed"] else EXIT_MISMATCH


def cmd_examples(args) -> int:
    anchors = reference_anchors(args.box)
    if args.json:
        _emit(dumps(anchors_json(anchors)), args.output)
    else:
        blocks = []
        for a in anchors:
            rows = [f"{a.label}: {a.formula}"]
            for method, series in sorted(a.computed.items()):
                rows.append(f"  {method}: {series.to_text()}")
            rows.append("  OK" if a.ok else "  FAIL")
            blocks.append("\n".join(rows))
        _emit("\n\n".join(blocks) + "\n", args.output)
    return EXIT_OK if all(a.ok for a in anchors) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="geopoincare", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def job_args(sp):
        sp.add_argument("--input", required=True, help="job document (JSON)")
        sp.add_argument("--output", help="write here instead of stdout")
        sp.add_argument("--cost-cap", type=int, default=DEFAULT_COST_CAP)

    sp = sub.add_parser("compute", help="compute one series")
    job_args(sp)
    sp.add_argument("--method", choices=METHODS, default="closed")
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("compare", help="closed form against the definition")
    job_args(sp)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("check", help="run an identity suite over all blow-up sequences")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--max-lines", type=int, default=4)
    sp.add_argument("--box", type=int, default=6)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--format", choices=("json", "text"), default="text")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("examples", help="reference series with known closed forms")
    sp.add_argument("--box", type=int, default=10)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_examples)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except JobError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CostCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
