import pytest

from tjurina import corpus

_ACCEPTANCE = []


@pytest.fixture(scope="session")
def corpus_members():
    return corpus.load()


@pytest.fixture
def record_criterion():
    """Record one acceptance line; printed in the terminal summary."""
    def record(number, status, text):
        _ACCEPTANCE.append((number, status, text))
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, text in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"[{status:<7}] criterion {number}: {text}")
