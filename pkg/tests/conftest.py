import pytest

from heavyberge.constructions import gen_sts
from heavyberge.hypergraph import Hypergraph


@pytest.fixture
def fano():
    return gen_sts(7)


@pytest.fixture
def berge_triangle():
    """Six triples, two on each side of the triangle 0-1-2, with private apexes."""
    return Hypergraph.of(9, 3, [(0, 1, 3), (0, 1, 4), (1, 2, 5), (1, 2, 6), (0, 2, 7), (0, 2, 8)])


@pytest.fixture
def fan():
    """Three triples through vertex 0; its 2-heavy graph is a star at 0."""
    return Hypergraph.of(4, 3, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])


def pytest_terminal_summary(terminalreporter):
    from tests.test_acceptance import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(LINES):
            terminalreporter.write_line(LINES[number])
