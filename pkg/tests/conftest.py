import pytest

from omsep import alternating

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def c52():
    return alternating(5, 2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
