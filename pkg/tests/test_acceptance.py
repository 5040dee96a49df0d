"""Acceptance criteria 1-7, one printed pass/fail line each.

Run with `pytest tests/test_acceptance.py -s` to see the lines as they are
produced; they are repeated in the terminal summary either way.
"""

import time

from krcrystal import harness
from krcrystal.harness import (
    AFFINE_INSTANCES,
    CONJECTURE,
    NO_CAPS,
    PHI_INSTANCES,
    VerificationReport,
    run_suite,
    two_factor_specs,
)

CRITERION_TWO = AFFINE_INSTANCES
NON_SPIN = [t for t in CRITERION_TWO if t[1] <= t[0] - 2]
TRACE_INSTANCES = PHI_INSTANCES + [(6, 4, 3), (7, 5, 3), (8, 4, 4), (8, 6, 4)]
# Every two-factor product up to five boxes; the eight-box sweep is a CLI run.
TENSOR_SPECS = [(4, spec) for spec in two_factor_specs(4, 5)]


def _cold() -> None:
    for cached in (harness._classical, harness._affine, harness._iota_map):
        cached.cache_clear()


def _timed(name: str, instances=None) -> tuple[VerificationReport, float]:
    t0 = time.perf_counter()
    rep = run_suite(name, NO_CAPS, instances)
    return rep, time.perf_counter() - t0


def _describe(rep: VerificationReport, seconds: float) -> str:
    text = f"{rep.suite}: {rep.passed}/{rep.checked} in {seconds:.1f}s"
    if rep.counterexample is not None:
        text += f"; counterexample {rep.counterexample}"
    return text


def test_criterion_1_corpus(criterion_line):
    rep, sec = _timed("corpus")
    ok = rep.ok and rep.checked > 0 and sec < 10
    criterion_line(1, ok, _describe(rep, sec))
    assert ok


def test_criterion_2_affine_isomorphism(criterion_line):
    rep, sec = _timed("iso", CRITERION_TWO)
    ok = rep.ok and "skipped" not in rep.details and len(rep.instances) == len(CRITERION_TWO)
    criterion_line(2, ok, _describe(rep, sec))
    assert ok


def test_criterion_3_statistics(criterion_line):
    _cold()
    rep, sec = _timed("stats", CRITERION_TWO)
    ok = rep.ok and len(rep.instances) == len(CRITERION_TWO) and sec < 60
    criterion_line(3, ok, _describe(rep, sec))
    assert ok


def test_criterion_4_phi_on_highest_elements(criterion_line):
    rep, sec = _timed("phi-highest", NON_SPIN)
    ok = rep.ok and rep.checked > 0 and sec < 60
    criterion_line(4, ok, _describe(rep, sec))
    assert ok


def test_criterion_5_trace_predictions(criterion_line):
    rep, sec = _timed("traces", TRACE_INSTANCES)
    seen = set()
    for key, counts in rep.details.items():
        if key != "skipped":
            seen.update(k for k, v in counts.items() if v)
    wanted = {f"step{k} {p} i" for k in (1, 2) for p in ("odd", "even")}
    ok = rep.ok and wanted <= seen
    criterion_line(5, ok, _describe(rep, sec) + f"; rules seen {sorted(seen)}")
    assert ok


def test_criterion_6_conjectures_do_not_gate(criterion_line):
    parts = []
    reports = []
    for name, instances in (("intertwine", TENSOR_SPECS), ("rmatrix", TENSOR_SPECS), ("phi-stats", None)):
        rep, sec = _timed(name, instances)
        reports.append(rep)
        parts.append(_describe(rep, sec))
    ok = all(rep.ok for rep in reports)
    criterion_line(6, ok, "; ".join(parts) + " (non-gating)")
    for rep in reports:
        assert rep.kind == CONJECTURE and not rep.gating
        assert rep.checked > 0 and (rep.failed == 0) == (rep.counterexample is None)


def test_criterion_7_round_trips(criterion_line):
    rep, sec = _timed("roundtrips", CRITERION_TWO)
    checks = set()
    for counts in rep.details.values():
        if isinstance(counts, dict):
            checks.update(counts)
    wanted = {"frakS^2", "sigma_rc^2", "gamma.gamma_inv", "gamma_rc.gamma_rc_inv", "e.f rc", "e.f tableau"}
    ok = rep.ok and wanted <= checks
    criterion_line(7, ok, _describe(rep, sec) + f"; checks {sorted(checks)}")
    assert ok

