"""Exact counting of rotation proximity events"""

from fractions import Fraction
import math

from chaoslab.errors import ArgumentError
from chaoslab.general.floorSum import floor_sum
from chaoslab.general.validateKeyword import (validate_keyword_rational,
                                              validate_keyword_delta,
                                              validate_keyword_big_int)


def count_rotation_hits(theta, dr, delta, start, stop, **kwargs):
    '''
    Count the indices `j` in `[start, stop)` for which the rotated angle
    `theta + j*dr` lies within `delta` of zero on the circle, i.e.
    `circle_dist(theta + j*dr, 0) < delta`.

    The test `rho(t, 0) < delta` is equivalent to `0 < (t + delta) mod 1 < 2*delta`
    (for `delta <= 1/2`). Multiplying through by a common denominator `M`
    turns this into `0 < (A*j + B) mod M < C` for integers, whose count over a
    range of `j` is a difference of two floor sums, minus the indices with an
    exact zero residue.

    Parameters
    ----------
    theta : Fraction
        Angle at `j = 0`
    dr : Fraction
        Rotation per index. May be negative or larger than a full turn
    delta : Fraction
        Strictly positive threshold
    start, stop : int
        Half-open index range. An empty range returns 0
    debug : bool, optional

    Returns
    -------
    count : int
    '''
    theta = validate_keyword_rational(theta, "theta")
    dr = validate_keyword_rational(dr, "dr")
    delta = validate_keyword_delta(delta)
    start, stop = int(start), int(stop)
    debug = kwargs.get("debug", False)
    n = stop - start
    if n <= 0:
        return 0
    if delta > Fraction(1, 2):
        # every distance on the circle is at most 1/2
        return n

    M = math.lcm(theta.denominator, dr.denominator, delta.denominator)
    A = int(dr * M)
    B = int((theta + delta) * M)
    C = int(2 * delta * M)
    # shift the index so that the sums run over i in [0, n)
    B0 = A * start + B

    # [x mod M < C] = floor(x/M) - floor((x - C)/M)  for 0 < C <= M
    below = floor_sum(n, M, A, B0) - floor_sum(n, M, A, B0 - C)
    zeros = _count_zero_residues(A, B0, M, n)
    if debug:
        print(f"M = {M}, A = {A}, B = {B0}, C = {C}")
        print(f"residues below C: {below}, exact zeros: {zeros}")
    return below - zeros


def _count_zero_residues(A, B, M, n):
    '''Number of i in [0, n) with A*i + B divisible by M'''
    g = math.gcd(A, M)
    if B % g:
        return 0
    a, b, m = A // g, B // g, M // g
    if m == 1:
        return n
    # i == -b * a^-1  (mod m)
    i0 = (-b * pow(a % m, -1, m)) % m
    if i0 >= n:
        return 0
    return (n - 1 - i0) // m + 1


def arc_hit_count(p, theta_u, theta_v, dr, delta, **kwargs):
    '''
    Count the indices `0 < i < p` at which an angle rotating by `dr` per step,
    starting at `theta_v`, is within `delta` of the fixed angle `theta_u`.

    This is the quantity estimated by the rotation lemma,
    `#{0 < i < p : rho(theta_u, (theta_v + i*dr) mod 1) < delta}`.
    It is computed in time logarithmic in `p`.

    Parameters
    ----------
    p : int
        Number of steps, `p >= 1`
    theta_u, theta_v : Fraction
        Angles in turns
    dr : Fraction
        Relative rotation per step
    delta : Fraction
        Strictly positive threshold

    Returns
    -------
    count : int

    Raises
    ------
    ArgumentError
        `p < 1` or `delta <= 0`

    See Also
    --------
    chaoslab.general.count_rotation_hits
    '''
    p = validate_keyword_big_int(p, "p")
    if p < 1:
        raise ArgumentError(f"arc_hit_count requires p >= 1. You provided {p}")
    theta_u = validate_keyword_rational(theta_u, "theta_u")
    theta_v = validate_keyword_rational(theta_v, "theta_v")
    return count_rotation_hits(theta_v - theta_u, dr, delta, 1, p, **kwargs)
