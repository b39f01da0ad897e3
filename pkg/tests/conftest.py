import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    # one line per acceptance criterion; xfail markers are not criteria
    if report.when != "call" or "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if hasattr(report, "wasxfail"):
        return
    name = report.nodeid.split("::")[-1]
    number = int(name.split("_")[2])
    ACCEPTANCE[number] = (report.passed, name)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, name = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {name}")
