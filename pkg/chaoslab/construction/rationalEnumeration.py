"""Enumerate the rationals of the open unit interval"""

from fractions import Fraction
import math

from chaoslab.general.validateKeyword import validate_keyword_big_int


def rational_enumeration(i):
    '''
    Return the `i`-th rational of (0, 1).

    Reduced fractions `p/q` are ordered by denominator `q = 2, 3, 4, ...` and
    then by numerator `p = 1 .. q-1`, skipping every `p/q` with
    `gcd(p, q) > 1`. The map `i -> r_i` is a bijection from the positive
    integers onto the rationals of (0, 1):

        1/2, 1/3, 2/3, 1/4, 3/4, 1/5, 2/5, ...

    Parameters
    ----------
    i : int
        1-based index

    Returns
    -------
    r : Fraction

    Raises
    ------
    ArgumentError
        i < 1
    '''
    i = validate_keyword_big_int(i, "i", minimum=1)
    q = 2
    while True:
        # phi(q) fractions share the denominator q
        numerators = [p for p in range(1, q) if math.gcd(p, q) == 1]
        if i <= len(numerators):
            return Fraction(numerators[i - 1], q)
        i -= len(numerators)
        q += 1
