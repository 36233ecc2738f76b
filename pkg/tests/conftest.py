import pytest
from hypothesis import settings

from vgraph import moser_instance, zsquare_instance

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_ACCEPTANCE = []


@pytest.fixture
def moser():
    return moser_instance()


@pytest.fixture
def zsq():
    return zsquare_instance()


@pytest.fixture
def criterion():
    """Record one acceptance line; printed again in the terminal summary."""

    def record(number, text, ok):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {text}"
        print(line)
        _ACCEPTANCE.append((number, line))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_ACCEPTANCE, key=lambda t: t[0]):
        terminalreporter.write_line(line)
