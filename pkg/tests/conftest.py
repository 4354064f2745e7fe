import random

import pytest

from multiacm import Configuration
from multiacm.algebra import PrimeField
from multiacm.lab.suites import example_configurations

# integer coordinates for the two-level examples in P^1 x P^2
Q = [[1, 2, 3], [2, -1, 5], [3, 7, -4], [5, -3, 2], [4, 1, -7]]
P = [[1, 1], [1, 2]]


def two_level(pairs, field=None):
    return Configuration.from_coords((1, 2), [[P[a], Q[b]] for a, b in pairs], field or PrimeField())


FOUR_POINTS = [(0, 0), (1, 1), (0, 2), (1, 2)]
SIX_POINTS = FOUR_POINTS + [(0, 3), (1, 3)]
EIGHT_POINTS = SIX_POINTS + [(0, 4), (1, 4)]


@pytest.fixture
def field():
    return PrimeField()


@pytest.fixture
def four_points():
    return two_level(FOUR_POINTS)


@pytest.fixture(scope="session")
def certified_examples():
    return example_configurations(random.Random("tests:examples"))


def grid(rows, cols, field=None):
    field = field or PrimeField()
    pts = [[[1, i], [1, j]] for i in range(rows) for j in range(cols)]
    return Configuration.from_coords((1, 1), pts, field)


ACCEPTANCE = {}  # criterion number -> (passed, seconds, label)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, secs, label = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {secs:7.2f}s  {label}")
