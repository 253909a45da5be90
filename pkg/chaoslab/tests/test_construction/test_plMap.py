""" Tests for piecewise-linear maps"""
import os
import sys
sys.path.insert(1, os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))

from fractions import Fraction
import inspect

import pytest

from chaoslab.construction import PLMap, IDENTITY, apply, iterate
from chaoslab.errors import ArgumentError

print("=== tests_construction_plmap ===")




###############################################################################
################                MAIN TESTS
###############################################################################

def test_invalid_inputs():
    with pytest.raises(ArgumentError): # does not start at the origin
        PLMap([(0, Fraction(1, 10)), (1, 1)])
    with pytest.raises(ArgumentError): # decreasing piece
        PLMap([(0, 0), (Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 4), Fraction(3, 4)), (1, 1)])
    with pytest.raises(ArgumentError): # flat piece
        PLMap([(0, 0), (Fraction(1, 2), Fraction(1, 2)), (Fraction(3, 4), Fraction(1, 2)), (1, 1)])
    with pytest.raises(ArgumentError):
        apply(IDENTITY, Fraction(3, 2))
    with pytest.raises(ArgumentError):
        IDENTITY.fixed_points()
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_apply_and_inverse():
    f = PLMap([(0, 0), (Fraction(1, 2), Fraction(1, 4)), (1, 1)])
    assert f(Fraction(1, 4)) == Fraction(1, 8)
    assert f(Fraction(3, 4)) == Fraction(5, 8)
    assert f(1) == 1
    g = f.inverse()
    for x in (Fraction(k, 17) for k in range(18)):
        assert g(f(x)) == x
        assert f(g(x)) == x
    assert f.sup_distance_to_identity() == Fraction(1, 4)
    assert f.fixed_points() == (0, 1)
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_iterate():
    f = PLMap([(0, 0), (Fraction(1, 2), Fraction(1, 4)), (1, 1)])
    assert iterate(f, Fraction(1, 2), 3) == Fraction(1, 16)
    assert iterate(f, Fraction(1, 2), 0) == Fraction(1, 2)
    # identity and fixed points short-circuit
    assert iterate(IDENTITY, Fraction(2, 3), 10**30) == Fraction(2, 3)
    assert iterate(f, 0, 10**30) == 0
    print(f"{inspect.stack()[0][3]} passed")
    return True
