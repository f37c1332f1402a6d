from pathlib import Path

import pytest

from condconf.parser import parse_ctrs

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

_acceptance_lines: list[str] = []


def load(name: str):
    return parse_ctrs((CORPUS / f"{name}.trs").read_text())


@pytest.fixture(scope="session")
def corpus():
    return load


@pytest.fixture(scope="session")
def acceptance_log():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
