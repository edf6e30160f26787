import pytest

from tropint.cycles import PLFunction, WeightedFan
from tropint.fans import Fan


@pytest.fixture
def p2_fan():
    """Fan of the projective plane: three rays, three 2-cones."""
    return Fan(2, [(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (0, 2)], label="p2")


@pytest.fixture
def hexagon_fan():
    """Complete unimodular fan with rays +-e1, +-e2, +-(1,1)."""
    return hexagon()


def hexagon():
    rays = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]
    cones = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]
    return Fan(2, rays, cones, label="hexagon")


@pytest.fixture
def tropical_line():
    """The standard tropical line: rays (1,0), (0,1), (-1,-1), weights 1."""
    fan = Fan(2, [(1, 0), (0, 1), (-1, -1)], [(0,), (1,), (2,)], label="line")
    return WeightedFan(fan, 1, {(0,): 1, (1,): 1, (2,): 1})


@pytest.fixture
def min_0xy(p2_fan):
    """The function min(0, x, y) as a piecewise-linear function on the plane fan."""
    return PLFunction(p2_fan, {
        (0, 1): (0, 0),    # first quadrant: the 0 branch is minimal
        (1, 2): (1, 0),    # x <= min(0, y) there
        (0, 2): (0, 1),    # y minimal
    })
