"""Shared fixtures; acceptance tests run last and their verdicts are echoed in the summary."""

import pytest

ACCEPTANCE_LINES: list[str] = []


def pytest_collection_modifyitems(session, config, items):
    # the product audit audits every product computed by the whole session,
    # so the acceptance module goes last
    items.sort(key=lambda item: item.nodeid.startswith("tests/test_acceptance.py"))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def acceptance_lines():
    return ACCEPTANCE_LINES
