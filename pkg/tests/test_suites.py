import pytest

from ptmsums.report import VerificationReport
from ptmsums.suites import SUITES, SuiteConfig, run_suite, suite_names

SMALL = SuiteConfig(max_n=3, samples=9)


@pytest.mark.parametrize("name", list(SUITES))
def test_every_suite_verifies(name):
    rep = run_suite(name, SMALL)
    assert rep.ok, rep.first_failure
    assert rep.cases_checked > 0
    assert rep.suite == name


def test_all_expands_in_declaration_order():
    assert suite_names("all") == list(SUITES)
    assert suite_names("cor2") == ["cor2"]
    with pytest.raises(ValueError):
        run_suite("nope", SMALL)


def test_cor2_case_count():
    assert run_suite("cor2", SuiteConfig(n=6)).cases_checked == 7


def test_report_records_first_failure_only():
    rep = VerificationReport("demo")
    rep.check(True)
    rep.check(False, {"i": 1}, 2, 3)
    rep.check(False, {"i": 2}, 4, 5)
    d = rep.to_dict()
    assert d["status"] == "counterexample" and d["cases_checked"] == 3
    assert d["first_failure"] == {"params": {"i": 1}, "expected": 2, "actual": 3}
    assert set(d) == {"suite", "params", "status", "cases_checked", "first_failure", "elapsed_ms"}
