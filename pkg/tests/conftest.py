from fractions import Fraction as F

import pytest

from tropicaust.domain import from_vertices, strip
from tropicaust.trig import cone
from tropicaust.wavefront import cone_domain

SQUARE = [(0, 0), (2, 0), (2, 2), (0, 2)]
RECT = [(0, 0), (3, 0), (3, 1), (0, 1)]
PENTAGON = [(0, 0), (4, 0), (4, 1), (2, 3), (0, 1)]
QUAD = [(0, 0), (1, -2), (1, 3), (0, 1)]
TRI3 = [(0, 0), (3, 0), (0, 3)]
TRI2 = [(0, 0), (2, 0), (0, 2)]
UNIT_TRI = [(0, 0), (1, 0), (0, 1)]
UNIT_SQ = [(0, 0), (1, 0), (1, 1), (0, 1)]


def pt(x, y):
    return (F(x), F(y))


@pytest.fixture
def square():
    return from_vertices(SQUARE)


@pytest.fixture
def rect():
    return from_vertices(RECT)


@pytest.fixture
def pentagon():
    return from_vertices(PENTAGON)


@pytest.fixture
def quad():
    return from_vertices(QUAD)


@pytest.fixture
def quadrant():
    return cone_domain(cone((1, 0), (0, 1)))


@pytest.fixture
def half_strip():
    # [0,1] x R>=0
    return from_vertices([(0, 0), (1, 0)], rays=((0, 1), (0, 1)))


@pytest.fixture
def strip3():
    return strip((0, 1), 0, 3)
