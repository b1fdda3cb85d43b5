import json

from semimod.corpus import ITEMS, b31_table_report, corpus_verify, load_goldens
from semimod.model import canonical_json


def test_all_items_pass():
    rep = corpus_verify()
    assert rep["passed"], [i["name"] for i in rep["items"] if not i["passed"]]
    assert [i["name"] for i in rep["items"]] == list(ITEMS)


def test_goldens_cover_every_item():
    assert set(load_goldens()) == set(ITEMS)


def test_drift_is_detected():
    goldens = load_goldens()
    goldens["d-iso"] = dict(goldens["d-iso"], quotient_size=3)
    rep = corpus_verify(goldens)
    item = next(i for i in rep["items"] if i["name"] == "d-iso")
    assert item["golden"] == "drift" and not item["passed"] and not rep["passed"]


def test_missing_golden_fails():
    rep = corpus_verify({})
    assert not rep["passed"]
    assert {i["golden"] for i in rep["items"]} == {"missing"}


def test_table_report_prints_note_and_correction():
    facts, ok = b31_table_report()
    assert ok
    assert facts["corrected_table"]["add"] == [[0, 1, 2], [1, 2, 1], [2, 1, 2]]
    assert facts["consistent_with_claims"] == [facts["corrected_table"]]
    assert all(not c["semiring"] for c in facts["literal_completions"])
    assert "corrected" in facts["note"]


def test_deterministic():
    a = canonical_json(corpus_verify())
    b = canonical_json(corpus_verify())
    assert a == b
    json.loads(a)
