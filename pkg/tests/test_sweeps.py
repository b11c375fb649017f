import json

import pytest

from chowmot.sweeps import SUITES, Sweep, run_suite


@pytest.mark.parametrize("suite", SUITES)
def test_small_sweeps_pass(suite):
    [s] = run_suite(suite, seed=3, count=5)
    assert s.passed and s.checks > 0, s.counterexample


def test_all_is_every_suite():
    assert [s.suite for s in run_suite("all", seed=0, count=2)] == list(SUITES)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("bogus")


def test_reports_are_deterministic():
    a = [s.to_json() for s in run_suite("corr", seed=11, count=10)]
    b = [s.to_json() for s in run_suite("corr", seed=11, count=10)]
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_first_failure_is_kept():
    s = Sweep("demo")
    s.check("p", True)
    s.check("p", False, lambda: "first")
    s.check("q", False, "second")
    assert (s.checks, s.failures, s.counterexample) == (3, 2, "p: first")
    assert s.to_json()["by_property"] == {"p": 2, "q": 1}
