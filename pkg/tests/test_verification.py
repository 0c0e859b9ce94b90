import pytest

from dyckflaws.verification import (
    BIJECTION_CHECKS,
    FORMULA_CHECKS,
    ORACLE_CHECKS,
    THREADS_ENV_VAR,
    run_suite,
    run_suites,
    thread_count,
)


def test_oracle_checks_pass_small():
    for check in ORACLE_CHECKS:
        result = check(6)
        assert result.passed, result


def test_formula_checks_pass_small():
    for check in FORMULA_CHECKS:
        result = check(6)
        assert result.passed, result


def test_bijection_checks_pass_small():
    for check in BIJECTION_CHECKS:
        result = check(6)
        assert result.passed, result


def test_run_suite_report_shape():
    doc = run_suite("series", n_max=5, order=5)
    assert doc["suite"] == "series"
    assert doc["status"] == "pass"
    assert [r["identity"] for r in doc["identities"]] == list("abcdefgh")
    assert all(r["first_failure"] is None for r in doc["identities"])
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_run_suites_aggregate():
    doc = run_suites(["oracle", "formulas"], n_max=5, order=4)
    assert doc["status"] == "pass"
    assert [s["suite"] for s in doc["suites"]] == ["oracle", "formulas"]


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nonsense", 5, 5)


def test_thread_override_is_report_invariant(monkeypatch):
    serial = run_suite("oracle", n_max=5, order=4, threads=1)
    threaded = run_suite("oracle", n_max=5, order=4, threads=4)
    assert serial == threaded


def test_thread_count_env(monkeypatch):
    monkeypatch.setenv(THREADS_ENV_VAR, "3")
    assert thread_count() == 3
    monkeypatch.setenv(THREADS_ENV_VAR, "junk")
    assert thread_count() == 1
    monkeypatch.delenv(THREADS_ENV_VAR)
    assert thread_count() == 1
