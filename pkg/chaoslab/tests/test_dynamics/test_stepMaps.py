""" Tests for the step maps F and f"""
import os
import sys
sys.path.insert(1, os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))

from fractions import Fraction
import inspect

import numpy as np
import pytest

from chaoslab.dynamics import (LIMIT, CylinderPoint, FiberPoint, step_F, step_f, project,
                               orbit, semiconjugacy_check, dist_X)
from chaoslab.errors import ArgumentError, HorizonError
import test_helpers as th

print("=== tests_dynamics_step_maps ===")




###############################################################################
################                MAIN TESTS
###############################################################################

def test_invalid_inputs():
    schedule = th.get_schedule(3)
    with pytest.raises(ArgumentError):
        step_F(schedule, FiberPoint(1, 0))
    with pytest.raises(ArgumentError):
        step_f(schedule, CylinderPoint(1, 0, 0))
    with pytest.raises(HorizonError):
        step_F(schedule, CylinderPoint(schedule.horizon, 0, 0))
    with pytest.raises(HorizonError): # the orbit runs out of the schedule
        orbit(schedule, FiberPoint(80, 0), 20)
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_single_steps():
    schedule = th.get_schedule(3)
    p = step_F(schedule, CylinderPoint(1, Fraction(1, 2), Fraction(1, 4)))
    # level 0: rotate by z, then apply h_0
    assert p == CylinderPoint(2, Fraction(3, 4), Fraction(1, 8))
    # identity block of level 2: rotate by z/2, height unchanged
    p = step_F(schedule, CylinderPoint(30, 0, Fraction(2, 5)))
    assert p == CylinderPoint(31, Fraction(1, 5), Fraction(2, 5))
    q = CylinderPoint(LIMIT, Fraction(1, 3), Fraction(1, 7))
    assert step_F(schedule, q) == q
    assert step_f(schedule, FiberPoint(1, Fraction(3, 4))) == FiberPoint(2, Fraction(7, 8))
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_semiconjugacy():
    schedule = th.get_schedule(12, 60)
    steps = 1000
    assert schedule.horizon > steps + 1
    max_cyl = min(20, schedule.horizon - steps - 1)
    rng = np.random.default_rng(2)
    for _ in range(200):
        p = th.random_cylinder_point(rng, max_cyl=max_cyl, limit_probability=0.1)
        assert semiconjugacy_check(schedule, p, steps)
        assert project(p) == FiberPoint(p.cyl, p.z)
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_isometry_on_shared_height():
    '''Same cylinder, same height: F rotates both points by the same angle'''
    schedule = th.get_schedule(6, th.test_cap)
    u = CylinderPoint(1, Fraction(1, 9), Fraction(2, 7))
    v = CylinderPoint(1, Fraction(5, 8), Fraction(2, 7))
    d0 = dist_X(u, v)
    for _ in range(200):
        u, v = step_F(schedule, u), step_F(schedule, v)
        assert u.z == v.z
        assert dist_X(u, v) == d0
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_endpoint_rigidity():
    '''Heights 0 and 1 are fixed by every g_k; at height 1 the angle turns by 1/l'''
    schedule = th.get_schedule(6, th.test_cap)
    visited = []
    orbit(schedule, CylinderPoint(1, 0, 1), 150, lambda i, p: visited.append(p))
    assert len(visited) == 151
    assert all(p.z == 1 for p in visited)
    for before, after in zip(visited[:-1], visited[1:]):
        l = schedule.level_of(before.cyl).l
        assert (after.phi - before.phi) % 1 == Fraction(1, max(l, 1)) % 1
    end = orbit(schedule, CylinderPoint(1, Fraction(1, 3), 0), 150)
    assert end == CylinderPoint(151, Fraction(1, 3), 0)
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_exact_return():
    '''After every complete level the height is back at its entry value'''
    schedule = th.get_schedule(6, th.test_cap)
    z = Fraction(3, 7)
    point = FiberPoint(1, z)
    for rec in schedule.levels:
        point = orbit(schedule, point, rec.m4 - rec.m1)
        assert point == FiberPoint(rec.m4, z)
    print(f"{inspect.stack()[0][3]} passed")
    return True
