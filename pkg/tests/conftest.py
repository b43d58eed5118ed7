from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from roughfsm import samples
from roughfsm.textio import parse_machine

FIXTURES = Path(__file__).parent / "fixtures"

ACCEPTANCE_LINES: list[str] = []
"""Filled by test_acceptance.py; echoed into the terminal summary."""


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def five_state_text() -> str:
    return (FIXTURES / "five_state.machine").read_text(encoding="utf-8")


@pytest.fixture()
def five_state(five_state_text):
    return parse_machine(five_state_text)


@pytest.fixture()
def five_state_sample():
    return samples.five_state_machine()


@pytest.fixture()
def relabel_trio():
    return samples.relabeled_pair()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
