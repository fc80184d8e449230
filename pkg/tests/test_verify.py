from __future__ import annotations

import pytest

from mutvis import is_connected
from mutvis.verify import (
    SuiteOptions,
    VerificationRecord,
    describe_suites,
    named_corpus,
    random_connected_graph,
    random_corpus,
    run_all,
    run_suite,
    suite_ids,
    tree_corpus,
)

# ids that outside callers rely on
_PINNED = ("thm:cp-tree-by-graphs", "cor:theta", "the:over-visible")


def test_registry_contains_the_documented_suites():
    ids = suite_ids()
    for tid in _PINNED:
        assert tid in ids
    descriptions = describe_suites()
    assert set(descriptions) == set(ids)
    assert all(descriptions[tid] for tid in ids)


def test_unknown_suite_id():
    with pytest.raises(KeyError) as err:
        run_suite("thm:no-such-result")
    assert "cor:theta" in str(err.value)


def test_records_are_well_formed():
    records = run_suite("fam:gm", SuiteOptions())
    assert records
    for r in records:
        assert isinstance(r, VerificationRecord)
        assert r.status in ("pass", "fail", "skipped-cap")
        d = r.to_dict()
        assert set(d) == {"theorem_id", "instance", "expected", "observed", "status"}
        assert d["theorem_id"] == "fam:gm"


def test_cap_shortfall_becomes_skipped_not_failed():
    records = run_suite("fam:gm", SuiteOptions(bp_cap=4))
    statuses = {r.instance: r.status for r in records}
    assert statuses["gm:1"] == "pass"
    assert statuses["gm:2"] == "skipped-cap"
    assert all(r.status != "fail" for r in records)
    assert all(r.passed for r in records)


def test_every_suite_passes_on_a_reduced_budget():
    opts = SuiteOptions(count=6, max_n=10)
    for tid in suite_ids():
        records = run_suite(tid, opts)
        assert records, tid
        failures = [r for r in records if r.status == "fail"]
        assert not failures, (tid, failures[:3])


def test_named_corpus_is_bounded_and_deduplicated():
    graphs = named_corpus(12)
    assert all(g.order <= 12 for g in graphs)
    names = [g.name for g in graphs]
    assert len(names) == len(set(names))
    assert {"petersen", "fig1", "fig2"} <= set(names)
    assert named_corpus(8) is named_corpus(8)
    assert all(g.order <= 8 for g in named_corpus(8))


def test_random_corpora_are_deterministic_and_connected():
    a = random_corpus(10, 9, 3)
    b = random_corpus(10, 9, 3)
    assert a == b
    assert all(is_connected(g) and 2 <= g.order <= 9 for g in a)
    assert random_connected_graph(7, 1) != random_connected_graph(7, 2)
    trees = tree_corpus(8, 3, 7, 0)
    assert all(t.num_edges == t.order - 1 for t in trees)
    assert all(3 <= t.order <= 7 for t in trees)


def test_run_all_aggregates_every_suite():
    opts = SuiteOptions(count=3, max_n=8)
    records = run_all(opts)
    seen = {r.theorem_id for r in records}
    assert seen == set(suite_ids())
    assert all(r.status != "fail" for r in records)
