import json

import pytest

from nilsym.suites import SUITES, UnknownSuite, run_suite

FAST = ["identities", "h2-table", "extensions", "degenerations", "theorem-b"]


@pytest.mark.parametrize("name", FAST)
def test_suite_passes(name):
    report = run_suite(name)
    assert report.passed, report.to_text()
    assert report.checks


def test_invariants_suite_passes_with_fewer_trials():
    report = run_suite("invariants", trials=100, search_budget=50)
    assert report.passed, report.to_text()


def test_json_is_deterministic():
    a = run_suite("degenerations").to_json()
    b = run_suite("degenerations").to_json()
    assert a == b
    data = json.loads(a)
    assert data["suite"] == "degenerations" and data["passed"] is True


def test_text_quiet_mode():
    report = run_suite("h2-table")
    assert len(report.to_text(quiet=True).splitlines()) < len(report.to_text().splitlines())


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")
    assert set(FAST) | {"invariants"} == set(SUITES)
