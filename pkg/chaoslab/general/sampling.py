"""Provide seeded, portable sampling of rationals"""

from fractions import Fraction
import math

import numpy as np

import chaoslab.defaults as default
from chaoslab.errors import ArgumentError


class RationalSampler:
    '''
    Seeded source of random integers and rationals.

    Only the raw 64-bit output of numpy's PCG64 bit generator is used; all
    derived values are produced here by rejection sampling on those words.
    The PCG64 stream for a given seed is fixed by the algorithm, so a seed
    reproduces the same samples on every platform and numpy version, which
    would not be true of `Generator.integers`.

    Parameters
    ----------
    seed : int
        Seed of the PCG64 bit generator
    '''

    def __init__(self, seed=None):
        self.seed = default.seed if seed is None else int(seed)
        self._bits = np.random.PCG64(self.seed)

    def _word(self):
        return int(self._bits.random_raw())

    def below(self, n):
        '''Uniform integer in [0, n), for any positive big integer `n`'''
        n = int(n)
        if n <= 0:
            raise ArgumentError(f"Sampling range must be positive, not {n}")
        words = max(1, (n.bit_length() + 63) // 64)
        span = 1 << (64 * words)
        limit = span - span % n
        while True:
            value = 0
            for _ in range(words):
                value = (value << 64) | self._word()
            if value < limit:
                return value % n

    def integer(self, low, high):
        '''Uniform integer in [low, high]'''
        return int(low) + self.below(int(high) - int(low) + 1)

    def log_integer(self, low, high):
        '''Integer in [low, high] drawn uniformly in its number of digits'''
        low, high = int(low), int(high)
        digits = self.integer(len(str(low)), len(str(high)))
        lo = max(low, 10 ** (digits - 1))
        hi = min(high, 10 ** digits - 1)
        return self.integer(lo, hi)

    def rational(self, low=0, high=1, max_denominator=None, closed=False):
        '''
        Rational in `[low, high)` (or `[low, high]` when `closed`) with
        denominator at most `max_denominator`
        '''
        low, high = Fraction(low), Fraction(high)
        q = self.integer(1, default.max_denominator if max_denominator is None
                         else max_denominator)
        first = math.ceil(low * q)
        last = math.floor(high * q)
        if not closed and Fraction(last, q) == high:
            last -= 1
        if last < first:
            return low
        return Fraction(self.integer(first, last), q)

    def choice(self, items):
        return items[self.below(len(items))]
