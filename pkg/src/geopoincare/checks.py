"""Exhaustive identity suites over all blow-up sequences up to a given length.

Each suite runs once per sequence of :func:`~geopoincare.resolution.enumerate_sequences`
and the report keeps that order whatever the number of worker processes.
"""
from __future__ import annotations

import itertools
import json
import random
from concurrent.futures import ProcessPoolExecutor

from .eulerlib import SheafSpec
from .mseries import binom_expand
from .poincare import (
    SeriesJob,
    chi_series,
    dg_series,
    geom_series_closed,
    geom_series_def,
    h0_series_O,
    lemma10_check_many,
    lemma9_check,
    omega1_spec,
)
from .resolution import build_graph, enumerate_sequences, exact_inverse, sequence_to_json

SUITES = ("lemma7", "lemma9", "lemma10", "integrality", "coincidence", "closed-form")
LEMMA10_U_VECTORS = 100
LEMMA10_U_BOUND = 10


def _series_diff(name_a, a, name_b, b):
    d = a.first_difference(b)
    if d is None:
        return 0, None
    e, x, y = d
    count = sum(1 for k in set(a.terms) | set(b.terms) if a.terms.get(k, 0) != b.terms.get(k, 0))
    return count, {"exp": list(e), name_a: x, name_b: y}


def _lemma7(g, box, seed, idx):
    s = g.s
    if s == 2:
        return {"checked": 0, "failures": 0, "first_counterexample": None, "note": "no claim for s=2"}
    series = chi_series(SeriesJob(g, SheafSpec.structure_sheaf(s), box))
    checked = (box + 1) ** s
    if s == 1:
        n, ce = _series_diff("chi_series", series, "expected", binom_expand(1, box, (1,), -2))
    else:
        n = len(series)
        ce = None if n == 0 else {"exp": list(series.items()[0][0]), "chi_series": series.items()[0][1], "expected": 0}
    return {"checked": checked, "failures": n, "first_counterexample": ce}


def _lemma9(g, box, seed, idx):
    checked = failures = 0
    ce = None
    for a in itertools.product(range(box + 1), repeat=g.s):
        res = lemma9_check(g, a)
        checked += 1
        if not res.equal:
            failures += 1
            if ce is None:
                ce = {"a": list(a), "lhs": res.lhs, "rhs": res.rhs}
    return {"checked": checked, "failures": failures, "first_counterexample": ce}


def _lemma10(g, box, seed, idx):
    rng = random.Random(seed * 1_000_003 + idx)
    us = [
        [rng.randint(-LEMMA10_U_BOUND, LEMMA10_U_BOUND) for _ in range(g.s)]
        for _ in range(LEMMA10_U_VECTORS)
    ]
    checked = failures = 0
    ce = None
    for a in itertools.product(range(box + 1), repeat=g.s):
        for u, res in zip(us, lemma10_check_many(g, a, us)):
            checked += 1
            if not res.equal:
                failures += 1
                if ce is None:
                    ce = {"a": list(a), "u": u, "lhs": res.lhs, "rhs": res.rhs}
    return {"checked": checked, "failures": failures, "first_counterexample": ce}


def _integrality(g, box, seed, idx):
    inv = exact_inverse(g.D)
    bad = [
        [i + 1, j + 1]
        for i, row in enumerate(inv)
        for j, x in enumerate(row)
        if x.denominator != 1 or x <= 0 or x != g.M[i][j]
    ]
    return {
        "checked": g.s * g.s,
        "failures": len(bad),
        "first_counterexample": {"entry": bad[0]} if bad else None,
    }


def _coincidence(g, box, seed, idx):
    job = SeriesJob(g, SheafSpec.structure_sheaf(g.s), box)
    d = geom_series_def(job)
    n1, ce1 = _series_diff("definition", d, "h0", h0_series_O(g, box))
    n2, ce2 = _series_diff("definition", d, "dg", dg_series(g, box))
    return {
        "checked": 2 * (box + 1) ** g.s,
        "failures": n1 + n2,
        "first_counterexample": ce1 or ce2,
    }


def _closed_form(g, box, seed, idx):
    checked = failures = 0
    ce = None
    per_preset = {}
    for name, sheaf in (("structure-sheaf", SheafSpec.structure_sheaf(g.s)), ("one-forms", omega1_spec(g))):
        job = SeriesJob(g, sheaf, box)
        n, c = _series_diff("definition", geom_series_def(job), "closed", geom_series_closed(job))
        checked += (box + 1) ** g.s
        failures += n
        per_preset[name] = n
        if c is not None and ce is None:
            ce = {"preset": name, **c}
    return {"checked": checked, "failures": failures, "failures_by_preset": per_preset, "first_counterexample": ce}


_RUNNERS = {
    "lemma7": _lemma7,
    "lemma9": _lemma9,
    "lemma10": _lemma10,
    "integrality": _integrality,
    "coincidence": _coincidence,
    "closed-form": _closed_form,
}


def run_instance(suite: str, idx: int, seq, box: int, seed: int) -> dict:
    g = build_graph(seq)
    result = _RUNNERS[suite](g, box, seed, idx)
    return {"index": idx, "s": g.s, "sequence": sequence_to_json(seq), **result}


def _run_packed(args):
    return run_instance(*args)


def run_suite(suite: str, max_lines: int, box: int, seed: int = 42, workers: int = 1) -> dict:
    """Run ``suite`` on every sequence with at most ``max_lines`` blow-ups."""
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    tasks = [(suite, idx, seq, box, seed) for idx, seq in enumerate(enumerate_sequences(max_lines))]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_packed, tasks, chunksize=1))
    else:
        results = [_run_packed(t) for t in tasks]
    failing = [r for r in results if r["failures"]]
    return {
        "suite": suite,
        "max_lines": max_lines,
        "box": box,
        "seed": seed,
        "instances": len(results),
        "checked": sum(r["checked"] for r in results),
        "failures": sum(r["failures"] for r in results),
        "failing_instances": len(failing),
        "passed": not failing,
        "results": results,
    }


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
