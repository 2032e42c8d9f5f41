"""Shared fixtures plus the acceptance-criteria summary hook."""

from __future__ import annotations

import pytest

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def small_connected_graphs():
    """All labeled connected graphs for n = 1..5, keyed by n."""
    from harmrad.families import Family, FamilySpec, connected_graphs

    return {
        n: list(connected_graphs(FamilySpec(Family.CONNECTED, n)))
        for n in range(1, 6)
    }
