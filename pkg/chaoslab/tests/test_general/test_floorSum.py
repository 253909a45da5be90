""" Tests for the floor sum"""
import os
import sys
sys.path.insert(1, os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))

import inspect

import numpy as np
import pytest

from chaoslab.errors import ArgumentError
from chaoslab.general import floor_sum as func
import test_helpers as th

print("=== tests_general_floor_sum ===")




###############################################################################
################                MAIN TESTS
###############################################################################

def test_invalid_inputs():
    with pytest.raises(ArgumentError): # m must be positive
        func(3, 0, 1, 1)
    with pytest.raises(ArgumentError):
        func(3, -2, 1, 1)
    with pytest.raises(ArgumentError): # negative number of terms
        func(-1, 3, 1, 1)
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_reduced_grid():
    '''Every n, m <= 50 with 0 <= a, b < m, the domain of the reduction loop'''
    for n in range(0, 51):
        for m in range(1, 51):
            table = th.brute_floor_sum_table(n, m, range(m), range(m))
            for a in range(m):
                row = table[a]
                for b in range(m):
                    assert func(n, m, a, b) == row[b]
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_signed_grid():
    '''Every |a|, |b| <= 50, including negative slopes and offsets'''
    values = range(-50, 51)
    for n in (0, 1, 2, 17, 50):
        for m in (1, 2, 3, 7, 13, 29, 50):
            table = th.brute_floor_sum_table(n, m, values, values)
            for ia, a in enumerate(values):
                row = table[ia]
                for ib, b in enumerate(values):
                    assert func(n, m, a, b) == row[ib]
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_table_oracle():
    '''The vectorised sums agree with summing Fractions'''
    table = th.brute_floor_sum_table(9, 4, range(-6, 7), range(-5, 6))
    for ia, a in enumerate(range(-6, 7)):
        for ib, b in enumerate(range(-5, 6)):
            assert table[ia, ib] == th.brute_floor_sum(9, 4, a, b)
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_random_large():
    rng = np.random.default_rng(1)
    for _ in range(200):
        n = int(rng.integers(0, 300))
        m = int(rng.integers(1, 10**6))
        a = int(rng.integers(-10**9, 10**9))
        b = int(rng.integers(-10**9, 10**9))
        assert func(n, m, a, b) == th.brute_floor_sum(n, m, a, b)
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_closed_forms():
    # sum of i over [0, n)
    n = 10**30
    assert func(n, 1, 1, 0) == n * (n - 1) // 2
    # floor(i/m) over a whole number of periods
    m, periods = 7, 10**20
    assert func(m * periods, m, 1, 0) == m * periods * (periods - 1) // 2
    assert func(0, 5, 3, 2) == 0
    print(f"{inspect.stack()[0][3]} passed")
    return True

#if __name__ == '__main__':
#    test_reduced_grid()
