import pytest

from dgb.ring import Ranking, RingContext
from dgb.testing import toric_system

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def toric():
    return toric_system()


@pytest.fixture
def ring4():
    ctx = RingContext(("x", "y", "z", "w"), ("u",))
    return ctx, Ranking.degrevlex(ctx)



@pytest.fixture(scope="session")
def small_systems():
    from dgb.testing import random_systems

    return [s for s in random_systems(40, seed=11, max_terms=3) if any(s[2])]
