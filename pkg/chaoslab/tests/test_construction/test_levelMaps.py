""" Tests for the level maps h_l"""
import os
import sys
sys.path.insert(1, os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))

from fractions import Fraction
import inspect

import numpy as np
import pytest

from chaoslab.construction import (make_h, compute_n_l, compute_eps_l, build_level,
                                   escape_holds, iterate, level_threshold)
from chaoslab.errors import ArgumentError
import test_helpers as th

print("=== tests_construction_level_maps ===")




###############################################################################
################                MAIN TESTS
###############################################################################

def test_invalid_inputs():
    with pytest.raises(ArgumentError):
        make_h(1, 0)
    with pytest.raises(ArgumentError):
        make_h(1, 1)
    with pytest.raises(ArgumentError):
        make_h(-1, Fraction(1, 2))
    maps = make_h(2, Fraction(2, 3))
    with pytest.raises(ArgumentError): # n_l not computed yet
        compute_eps_l(maps, 2)
    with pytest.raises(ArgumentError): # level mismatch
        compute_n_l(maps, 3)
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_shape_of_h():
    for l, r in ((0, Fraction(1, 2)), (3, Fraction(1, 4)), (5, Fraction(1, 5)), (9, Fraction(7, 9))):
        maps = make_h(l, r)
        assert maps.alpha == min(r, 1 - r) / (2 * (l + 2))
        assert maps.h.fixed_points() == (0, r, 1)
        assert maps.h.sup_distance_to_identity() == maps.alpha
        # pushes away from r
        assert maps.h(r / 2) < r / 2
        assert maps.h((1 + r) / 2) > (1 + r) / 2
        for x in (Fraction(k, 13) for k in range(14)):
            assert maps.h_inv(maps.h(x)) == x
    maps = make_h(0, Fraction(1, 2))
    assert maps.alpha == Fraction(1, 8)
    assert maps.h(Fraction(1, 4)) == Fraction(1, 8)
    assert maps.h(Fraction(3, 4)) == Fraction(7, 8)
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_escape_time_level_2():
    maps = build_level(2, Fraction(2, 3))
    assert maps.n == 1
    # the inclusions hold before any step, n_l = 1 is the floor of the search
    assert escape_holds(maps, 0)
    # only the lower inclusion matters: 2/3 + 1/2 > 1
    assert maps.h(Fraction(1, 6)) == Fraction(7, 48)
    assert maps.h(Fraction(1, 2)) == Fraction(23, 48)
    assert maps.eps == Fraction(23, 48)
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_escape_time_level_3():
    maps = build_level(3, Fraction(1, 4))
    assert maps.n == 4
    assert iterate(maps.h, Fraction(7, 12), 4) > Fraction(2, 3)
    assert iterate(maps.h, Fraction(7, 12), 3) <= Fraction(2, 3)
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_minimal_and_margin():
    for l, r in ((2, Fraction(2, 3)), (3, Fraction(1, 4)), (4, Fraction(3, 4)), (5, Fraction(1, 5))):
        maps = build_level(l, r)
        assert escape_holds(maps, maps.n)
        assert maps.n == 1 or not escape_holds(maps, maps.n - 1)
        t = level_threshold(l)
        assert maps.eps == min(iterate(maps.h, t, maps.n), 1 - iterate(maps.h, 1 - t, maps.n))
        assert 0 < maps.eps <= 1
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_vacuous_levels():
    '''With the threshold 1 of levels 0 and 1 both inclusions are vacuous'''
    for l, r in ((0, Fraction(1, 2)), (1, Fraction(1, 3))):
        maps = build_level(l, r)
        assert maps.n == 1
        assert maps.eps == 1
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_random_points():
    '''h moves points away from r, h_inv undoes it, and iterates keep the order'''
    rng = np.random.default_rng(29)
    for l, r in ((1, Fraction(1, 3)), (4, Fraction(3, 4)), (7, Fraction(2, 5))):
        maps = make_h(l, r)
        xs = []
        while len(xs) < 100:
            x = th.random_rational(rng, 60)
            if x not in (0, r, 1):
                xs.append(x)
        for x in xs:
            if x < r:
                assert maps.h(x) < x
            else:
                assert maps.h(x) > x
            assert maps.h_inv(maps.h(x)) == x
            assert maps.h(maps.h_inv(x)) == x
        xs.sort()
        for n in (1, 3, 8):
            images = [iterate(maps.h, x, n) for x in xs]
            assert all(a <= b for a, b in zip(images, images[1:]))
            assert all(a < b for a, b, x, y in zip(images, images[1:], xs, xs[1:]) if x < y)
    print(f"{inspect.stack()[0][3]} passed")
    return True
