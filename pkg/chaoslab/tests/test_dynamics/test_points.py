""" Tests for points and metrics"""
import os
import sys
sys.path.insert(1, os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))

from fractions import Fraction
import inspect

import pytest

from chaoslab.dynamics import (LIMIT, CylinderPoint, FiberPoint, point_from_literal,
                               radius, dist_X, dist_Y, distance)
from chaoslab.errors import ArgumentError

print("=== tests_dynamics_points ===")




###############################################################################
################                MAIN TESTS
###############################################################################

def test_invalid_inputs():
    with pytest.raises(ArgumentError): # cylinders start at 1
        FiberPoint(0, Fraction(1, 2))
    with pytest.raises(ArgumentError): # height outside [0, 1]
        CylinderPoint(1, 0, Fraction(5, 4))
    with pytest.raises(ArgumentError):
        point_from_literal('{"k": "1"}')
    with pytest.raises(ArgumentError):
        point_from_literal('{"k": "1", "z": "0", "theta": "0"}')
    with pytest.raises(ArgumentError):
        point_from_literal('{"k": 1, z: 0}')
    with pytest.raises(ArgumentError):
        dist_X(CylinderPoint(1, 0, 0), FiberPoint(1, 0))
    with pytest.raises(ArgumentError):
        dist_Y(CylinderPoint(1, 0, 0), CylinderPoint(1, 0, 1))
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_construction():
    p = CylinderPoint("3", Fraction(5, 4), "1/2")
    assert (p.cyl, p.phi, p.z) == (3, Fraction(1, 4), Fraction(1, 2))
    assert CylinderPoint(1, Fraction(-1, 3), 0).phi == Fraction(2, 3)
    assert FiberPoint("LIMIT", 1).cyl == LIMIT
    assert radius(1) == 1
    assert radius(4) == Fraction(7, 4)
    assert radius(LIMIT) == 2
    assert p.radius == Fraction(5, 3)
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_literals():
    assert point_from_literal('{"k": "2", "phi": "1/3", "z": "2/5"}') == \
        CylinderPoint(2, Fraction(1, 3), Fraction(2, 5))
    assert point_from_literal({"k": "limit", "z": "1"}) == FiberPoint(LIMIT, 1)
    p = CylinderPoint(7, Fraction(3, 8), Fraction(1, 9))
    assert point_from_literal(p.to_dict()) == p
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_metrics():
    u = CylinderPoint(1, Fraction(1, 10), Fraction(1, 2))
    v = CylinderPoint(2, Fraction(9, 10), Fraction(3, 5))
    # radii 1 and 3/2, heights 1/10 apart, angles 1/5 apart
    assert dist_X(u, v) == Fraction(1, 2)
    assert distance(u, v) == dist_X(v, u)
    w = CylinderPoint(2, Fraction(1, 2), Fraction(3, 5))
    assert dist_X(v, w) == Fraction(2, 5)
    assert dist_Y(FiberPoint(3, 0), FiberPoint(LIMIT, Fraction(1, 5))) == Fraction(1, 3)
    assert distance(FiberPoint(1, 0), FiberPoint(1, 1)) == 1
    print(f"{inspect.stack()[0][3]} passed")
    return True
