""" Tests for the seeded rational sampler and the worker pool"""
import os
import sys
sys.path.insert(1, os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))

from fractions import Fraction
import inspect

import pytest

from chaoslab.errors import ArgumentError
from chaoslab.construction import rational_enumeration
from chaoslab.general import RationalSampler, parallel_map, worker_count

print("=== tests_general_sampling ===")


###############################################################################
################                MAIN TESTS
###############################################################################

def test_reproducible():
    a, b = RationalSampler(123), RationalSampler(123)
    draws_a = [a.rational(0, 1, 50) for _ in range(50)]
    draws_b = [b.rational(0, 1, 50) for _ in range(50)]
    assert draws_a == draws_b
    c = RationalSampler(124)
    assert [c.rational(0, 1, 50) for _ in range(50)] != draws_a
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_ranges():
    sampler = RationalSampler(3)
    for _ in range(500):
        assert 0 <= sampler.below(7) < 7
        assert -3 <= sampler.integer(-3, 3) <= 3
        x = sampler.rational(Fraction(1, 4), Fraction(3, 4), 20)
        assert Fraction(1, 4) <= x < Fraction(3, 4)
        assert x.denominator <= 20
        y = sampler.rational(0, 1, 10, closed=True)
        assert 0 <= y <= 1
        n = sampler.log_integer(10, 10**12)
        assert 10 <= n <= 10**12
    big = 10**50
    assert 0 <= sampler.below(big) < big
    with pytest.raises(ArgumentError):
        sampler.below(0)
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_log_integer_spreads_digits():
    sampler = RationalSampler(8)
    digits = {len(str(sampler.log_integer(1, 10**9))) for _ in range(400)}
    assert digits == set(range(1, 11))
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_worker_count():
    assert worker_count(environ={}) == 1
    assert worker_count(environ={"CHAOS_LAB_THREADS": "3"}) == 3
    with pytest.raises(ArgumentError):
        worker_count(environ={"CHAOS_LAB_THREADS": "many"})
    with pytest.raises(ArgumentError):
        worker_count(environ={"CHAOS_LAB_THREADS": "0"})
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_parallel_map_order():
    items = list(range(1, 21))
    expected = [rational_enumeration(i) for i in items]
    assert parallel_map(rational_enumeration, items, workers=1) == expected
    assert parallel_map(rational_enumeration, items, workers=2) == expected
    print(f"{inspect.stack()[0][3]} passed")
    return True
