"""The verification harness itself: clean runs, fault detection, shrinking."""

import numpy as np

from swapmatch.verify import (minimize_case, run_verify, equivalence_mismatch,
                              random_pattern, random_text)


def test_clean_run_reports_ok():
    report = run_verify(sigmas=(2, 4), m_max=10, n=300, iterations=30, seed=5)
    assert report.ok
    assert report.cases == 30
    lines = report.summary_lines()
    assert lines[-1] == "result: OK"
    assert any(line.startswith("engine equivalence") for line in lines)


def test_minimizer_preserves_failure():
    # a synthetic failure: "text contains the pattern's first byte twice"
    p = b"ab"
    rng = np.random.default_rng(2)
    t = random_text(rng, 2, 400) + b"aa"

    def failing(pp, tt):
        return tt.count(pp[:1]) >= 2

    sp, st = minimize_case(p, t, failing)
    assert failing(sp, st)
    assert len(st) <= 4


def test_trivial_patterns_pass():
    # m = 1: no swaps possible anywhere
    report = run_verify(sigmas=(2,), m_max=1, n=500, iterations=10, seed=9)
    assert report.ok


def test_equivalence_mismatch_is_none_on_agreement():
    rng = np.random.default_rng(31)
    for _ in range(10):
        p = random_pattern(rng, 4, 6)
        t = random_text(rng, 4, 200)
        assert equivalence_mismatch(p, t) is None
