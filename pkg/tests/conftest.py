import random

import pytest

ACCEPTANCE_LINES = []


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    """Remember one acceptance verdict for the terminal summary."""
    ACCEPTANCE_LINES.append((number, f"[{number:>2}] {'PASS' if ok else 'FAIL'}  {title}  {detail}".rstrip()))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20240601)
