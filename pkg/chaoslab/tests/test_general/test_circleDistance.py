""" Tests for circle distance"""
import os
import sys
sys.path.insert(1, os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))

from fractions import Fraction
import inspect

from chaoslab.general import circle_dist, normalise_angle

print("=== tests_general_circle_dist ===")




###############################################################################
################                MAIN TESTS
###############################################################################

def test_normalise():
    assert normalise_angle(Fraction(-1, 3)) == Fraction(2, 3)
    assert normalise_angle(Fraction(7, 3)) == Fraction(1, 3)
    assert normalise_angle(1) == 0
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_distances():
    assert circle_dist(Fraction(1, 10), Fraction(9, 10)) == Fraction(1, 5)
    assert circle_dist(0, Fraction(1, 2)) == Fraction(1, 2)
    assert circle_dist(Fraction(1, 3), Fraction(1, 3) + 5) == 0
    assert circle_dist(Fraction(1, 4), Fraction(-1, 4)) == Fraction(1, 2)
    a, b = Fraction(2, 7), Fraction(5, 6)
    assert circle_dist(a, b) == circle_dist(b, a)
    print(f"{inspect.stack()[0][3]} passed")
    return True
