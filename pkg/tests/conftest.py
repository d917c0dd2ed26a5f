import sys

import pytest

from roundsleek import IntervalSpace, IntervalUnion, ToleranceConfig


@pytest.fixture
def cfg():
    return ToleranceConfig()


@pytest.fixture
def line():
    return IntervalSpace(IntervalUnion.real_line())


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
