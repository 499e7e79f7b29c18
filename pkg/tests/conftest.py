"""Shared pytest wiring: acceptance tests record one line per criterion
through the `criterion_log` fixture and the lines are printed in the
terminal summary, visible whether or not output capture is on.
"""

import pytest

_LINES: list[tuple[int, str]] = []


def record_criterion(num: int, passed: bool, detail: str) -> None:
    word = "PASS" if passed else "FAIL"
    _LINES.append((num, f"{word} criterion {num:2d}: {detail}"))


@pytest.fixture
def criterion_log():
    return record_criterion


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_LINES):
        terminalreporter.write_line(line)
