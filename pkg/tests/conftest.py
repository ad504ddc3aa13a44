import sys

import pytest

from strategies import standard_contexts


@pytest.fixture(scope="session")
def contexts():
    return standard_contexts()


@pytest.fixture
def conic():
    return standard_contexts()["conic"]


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
