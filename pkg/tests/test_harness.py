import pytest
from hypothesis import given
from hypothesis import strategies as st

from krcrystal import harness
from krcrystal.corpus import cases, run_cases
from krcrystal.harness import (
    CONJECTURE,
    THEOREM,
    CapExceeded,
    Caps,
    VerificationReport,
    gating_ok,
    merge_reports,
    run_corpus,
    run_suite,
    two_factor_specs,
    verify_affine_isomorphism,
    verify_intertwine,
    verify_statistics,
)
from krcrystal.rigged import TensorSpec


def _report(outcomes, tag):
    rep = VerificationReport("demo", THEOREM, [{"tag": tag}])
    for k, ok in enumerate(outcomes):
        rep.record(ok, lambda k=k: {"tag": tag, "index": k})
    return rep


@given(st.lists(st.lists(st.booleans(), max_size=6), min_size=1, max_size=4))
def test_counterexample_exactly_when_something_failed(batches):
    reps = [_report(b, t) for t, b in enumerate(batches)]
    merged = merge_reports(reps)
    assert merged.checked == sum(len(b) for b in batches)
    assert merged.passed + merged.failed == merged.checked
    assert (merged.failed == 0) == (merged.counterexample is None)
    if merged.failed:
        first = next(t for t, b in enumerate(batches) if not all(b))
        assert merged.counterexample["tag"] == first


@given(st.lists(st.booleans(), max_size=5), st.lists(st.booleans(), max_size=5), st.lists(st.booleans(), max_size=5))
def test_merge_is_associative(a, b, c):
    x, y, z = _report(a, 0), _report(b, 1), _report(c, 2)
    assert x.merge(y).merge(z).to_json() == x.merge(y.merge(z)).to_json()


def test_merge_refuses_different_suites():
    with pytest.raises(ValueError):
        VerificationReport("a", THEOREM).merge(VerificationReport("b", THEOREM))


def test_conjecture_reports_never_gate():
    bad = _report([False], 0)
    conj = VerificationReport("c", CONJECTURE)
    conj.record(False, lambda: {})
    assert not gating_ok([bad])
    assert gating_ok([conj, _report([True], 1)])


def test_caps():
    with pytest.raises(CapExceeded):
        verify_affine_isomorphism(7, 1, 1)
    with pytest.raises(CapExceeded):
        verify_statistics(4, 4, 3)
    rep = run_suite("stats", instances=[(4, 1, 1), (4, 4, 3)])
    assert rep.details["skipped"] == ["n=4 B^4,3"]
    assert rep.ok and rep.checked == 8


def test_failures_carry_a_replayable_counterexample(monkeypatch):
    monkeypatch.setattr(harness, "coenergy_single", lambda b: 7)
    rep = verify_statistics(4, 1, 1)
    assert rep.failed == 8
    ce = rep.counterexample
    assert ce["coenergy"] == 7 and ce["cocharge"] == 0
    assert ce["b"] == {"r": 1, "s": 1, "tableau": [[1]]}


def test_small_suites_pass():
    assert verify_affine_isomorphism(4, 1, 2).ok
    rep = verify_intertwine(4, TensorSpec(((1, 1), (1, 1))))
    assert rep.ok and rep.kind == CONJECTURE and rep.details["n=4 B^1,1 x B^1,1"] == {"vertices": 64}


def test_parallel_runs_match_serial_runs():
    inst = [(4, 1, 1), (4, 2, 1), (4, 1, 2)]
    serial = run_suite("iso", instances=inst)
    parallel = run_suite("iso", instances=inst, jobs=2)
    assert (serial.checked, serial.passed, serial.instances) == (parallel.checked, parallel.passed, parallel.instances)


def test_two_factor_specs():
    specs = two_factor_specs(4, 4)
    assert TensorSpec(((2, 1), (2, 1))) in specs and TensorSpec(((1, 3), (1, 1))) in specs
    assert all(sum(r * s for r, s in sp.factors) <= 4 for sp in specs)
    assert all(r <= 2 for sp in specs for r, _ in sp.factors)


def test_corpus_cases_are_anchored_and_replay():
    assert all(c.anchor for c in cases())
    assert len({c.ident for c in cases()}) == len(cases())
    assert all(res.passed for res in run_cases())
    rep = run_corpus()
    assert rep.ok and rep.checked == len(cases())


def test_caps_dataclass_defaults():
    caps = Caps()
    assert (caps.max_n, caps.max_r, caps.max_s, caps.max_boxes) == (6, 4, 4, 10)
    caps.check(6, [(4, 2), (1, 2)])
    with pytest.raises(CapExceeded):
        caps.check(6, [(4, 2), (2, 2)])
