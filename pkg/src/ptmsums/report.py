"""Outcome records for verification runs."""

import time
from contextlib import contextmanager
from dataclasses import dataclass, field

VERIFIED = "verified"
COUNTEREXAMPLE = "counterexample"
ERROR = "error"


def _render(value):
    if hasattr(value, "text"):
        return value.text()
    if isinstance(value, (list, tuple)):
        return [_render(v) for v in value]
    if isinstance(value, dict):
        return {k: _render(v) for k, v in value.items()}
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    return str(value)


@dataclass
class VerificationReport:
    suite: str
    params: dict = field(default_factory=dict)
    status: str = VERIFIED
    cases_checked: int = 0
    first_failure: dict | None = None
    elapsed_ms: int = 0

    @property
    def ok(self):
        return self.status == VERIFIED

    def check(self, passed, params=None, expected=None, actual=None):
        """Record one case; keeps only the first failure."""
        self.cases_checked += 1
        if not passed and self.first_failure is None:
            self.status = COUNTEREXAMPLE
            self.first_failure = {
                "params": _render(params or {}),
                "expected": _render(expected),
                "actual": _render(actual),
            }
        return passed

    def fail(self, message, params=None):
        self.status = ERROR
        if self.first_failure is None:
            self.first_failure = {"params": _render(params or {}), "error": message}

    def to_dict(self):
        return {
            "suite": self.suite,
            "params": _render(self.params),
            "status": self.status,
            "cases_checked": self.cases_checked,
            "first_failure": self.first_failure,
            "elapsed_ms": self.elapsed_ms,
        }

    def summary(self):
        line = f"{self.suite}: {self.status} ({self.cases_checked} cases)"
        if self.first_failure:
            line += f" first failure at {self.first_failure.get('params')}"
        return line


@contextmanager
def timed(report):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed_ms = int((time.perf_counter() - start) * 1000)
