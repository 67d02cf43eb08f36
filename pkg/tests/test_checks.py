from geopoincare.checks import report_json, run_instance, run_suite
from geopoincare.resolution import enumerate_sequences


def test_report_structure():
    rep = run_suite("integrality", 4, 0)
    assert rep["instances"] == 20
    assert [r["index"] for r in rep["results"]] == list(range(20))
    assert rep["passed"] and rep["failures"] == 0


def test_parallel_matches_sequential():
    a = report_json(run_suite("lemma10", 3, 3, seed=5, workers=1))
    b = report_json(run_suite("lemma10", 3, 3, seed=5, workers=3))
    assert a == b


def test_seed_changes_u_vectors_only():
    a = run_suite("lemma10", 3, 2, seed=1)
    b = run_suite("lemma10", 3, 2, seed=2)
    assert a["passed"] and b["passed"] and a["checked"] == b["checked"]


def test_instance_counterexample_format():
    seqs = list(enumerate_sequences(4))
    r = run_instance("closed-form", 5, seqs[5], 2, 42)
    assert r["s"] == 4 and r["failures"] > 0
    assert set(r["first_counterexample"]) == {"preset", "exp", "definition", "closed"}
