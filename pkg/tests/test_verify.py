from __future__ import annotations

import pytest

from fockforge.verify import SUITES, SuiteConfig, Tally, run_suite

SMALL = {
    "clifford": SuiteConfig(r=2, size=3, charges=1, index=2),
    "heisenberg": SuiteConfig(degree=5, index=2),
    "boson-fermion": SuiteConfig(degree=3, index=2, charges=1),
    "vertex": SuiteConfig(degree=3, index=2, charges=1),
    "glr-bracket": SuiteConfig(size=2, charges=1, index=1),
    "level-k": SuiteConfig(k=2, degree=4),
    "signs": SuiteConfig(degree=3),
    "localization": SuiteConfig(degree=2, k=3),
    "quotient": SuiteConfig(k=2, degree=6),
    "counting": SuiteConfig(degree=3, k=2),
}


def test_every_suite_has_a_small_config():
    assert set(SMALL) == set(SUITES)


@pytest.mark.parametrize("name", sorted(SMALL))
def test_suite_passes_at_small_scale(name):
    (report,) = run_suite(name, SMALL[name])
    assert report.suite == name
    assert report.checks
    failed = [c for c in report.checks if not c.passed]
    assert not failed, failed
    assert all(c.checked > 0 for c in report.checks)
    d = report.to_dict()
    assert d["ok"] is True and len(d["checks"]) == len(report.checks)


def test_parallel_matches_serial():
    serial = run_suite("boson-fermion", SuiteConfig(degree=3, index=2, charges=1))[0]
    parallel = run_suite("boson-fermion", SuiteConfig(degree=3, index=2, charges=1, jobs=2))[0]
    assert [(c.identity, c.passed, c.checked) for c in serial.checks] == [
        (c.identity, c.passed, c.checked) for c in parallel.checks
    ]


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_tally_keeps_first_failure_and_order():
    a, b = Tally(), Tally()
    a.record("x", True)
    a.record("y", False, "first")
    b.record("y", False, lambda: "second")
    b.record("z", True)
    b.note("z", 7)
    a.merge(b)
    checks = a.checks()
    assert [c.identity for c in checks] == ["x", "y", "z"]
    assert checks[1].counterexample == "first" and checks[1].checked == 2
    assert checks[2].value == "7" and checks[2].passed
