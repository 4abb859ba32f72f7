"""Shared test configuration.

The acceptance module appends one line per criterion to ACCEPTANCE_LINES;
the terminal-summary hook replays them at the end of the run so the
pass/fail verdicts are visible even when stdout capture is on.
"""

from __future__ import annotations

from hypothesis import HealthCheck, settings

settings.register_profile(
    "slowbox",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("slowbox")

ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
