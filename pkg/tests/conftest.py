import random

import pytest

from helpers import FIGURE
from xorsym.bdd import parse_obdd


@pytest.fixture
def figure():
    return parse_obdd(FIGURE)


@pytest.fixture
def rng():
    return random.Random(20241016)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        status, title, info, elapsed = RESULTS[number]
        detail = " ".join("%s=%s" % kv for kv in info.items())
        terminalreporter.write_line("[%s] criterion %d: %s (%.2fs) %s" % (status, number, title, elapsed, detail))
