"""Check the rotation lemma on concrete parameters"""

from fractions import Fraction

from chaoslab.errors import ArgumentError
from chaoslab.general.arcHitCount import arc_hit_count
from chaoslab.general.circleDistance import circle_dist
from chaoslab.general.validateKeyword import (validate_keyword_rational,
                                              validate_keyword_delta,
                                              validate_keyword_big_int)


def lemma1_bound_check(theta_u, theta_v, r_u, r_v, delta, p, **kwargs):
    '''
    Compare the exact fraction of close approaches of two rotating angles
    with the `3*delta` estimate of the rotation lemma.

    Two angles rotate by `r_u` and `r_v` per step. Their distance at step `i`
    equals `rho(theta_u, theta_v + i*(r_v - r_u))`, so the count is an
    `arc_hit_count` with the relative rotation.

    The `3*delta` estimate is only guaranteed when the relative rotation is
    small compared with `delta`; a rotation by 1/4 with `delta = 1/1000`
    already produces a fraction of 2/9 at `p = 9`. The report therefore
    carries, besides the plain comparison `holds`, the turn-counting bound
    `((p-2)*D + 2*delta + 1) * (2*delta/D + 1) / p`, where `D` is the
    circular size of the relative rotation, which holds for all inputs, and
    a flag for the regime `D <= delta/4, p*D >= 8, delta <= 1/4` in which the
    turn-counting bound is itself below `3*delta`.

    Parameters
    ----------
    theta_u, theta_v : Fraction
        Initial angles in turns
    r_u, r_v : Fraction
        Rotation per step of each angle
    delta : Fraction
        Strictly positive threshold
    p : int
        Number of steps. Must satisfy `p > 2/|r_u - r_v|`

    Returns
    -------
    report : dict
        count : int
            number of `0 < i < p` with distance below `delta`
        fraction : Fraction
            `count / p`
        bound : Fraction
            `3*delta`
        holds : bool
            `fraction < 3*delta`
        proof_bound : Fraction
            `2*delta + 2*delta/(p*dr)`, the intermediate estimate of the
            turn-counting argument
        turn_bound : Fraction
            always-valid upper bound of `fraction`
        rigorous_regime : bool
            inputs lie in the regime where `fraction < 3*delta` is guaranteed
        dr : Fraction
            `|r_u - r_v|`

    Raises
    ------
    ArgumentError
        No relative rotation, or `p` too small
    '''
    theta_u = validate_keyword_rational(theta_u, "theta_u")
    theta_v = validate_keyword_rational(theta_v, "theta_v")
    r_u = validate_keyword_rational(r_u, "r_u")
    r_v = validate_keyword_rational(r_v, "r_v")
    delta = validate_keyword_delta(delta)
    p = validate_keyword_big_int(p, "p")

    dr = abs(r_u - r_v)
    if dr == 0:
        raise ArgumentError("relative rotation required: r_u and r_v are equal")
    if p <= 2 / dr:
        raise ArgumentError(f"p must exceed 2/dr = {2 / dr}. You provided {p}")

    count = arc_hit_count(p, theta_u, theta_v, r_v - r_u, delta, **kwargs)
    fraction = Fraction(count, p)
    bound = 3 * delta
    effective = circle_dist(r_u, r_v)
    report = {
        "count": count,
        "fraction": fraction,
        "bound": bound,
        "holds": fraction < bound,
        "proof_bound": 2 * delta + 2 * delta / (p * dr),
        "turn_bound": turn_bound(p, effective, delta),
        "rigorous_regime": in_rigorous_regime(p, effective, delta),
        "dr": dr,
    }
    return report


def turn_bound(p, rotation, delta):
    '''
    Upper bound on `#{0 < i < p : rho(theta, i*rotation) < delta} / p`.

    The `p - 1` rotated points span `(p-2)*rotation` on the line; at most
    `(p-2)*rotation + 2*delta + 1` translates of the open arc meet that span
    and each holds at most `2*delta/rotation + 1` points. A rotation of zero
    (or a full turn) gives the trivial bound 1.
    '''
    rotation = abs(Fraction(rotation)) % 1
    rotation = min(rotation, 1 - rotation)
    if p <= 1:
        return Fraction(0)
    if rotation == 0:
        return Fraction(p - 1, p)
    passes = (p - 2) * rotation + 2 * delta + 1
    per_pass = 2 * delta / rotation + 1
    return min(passes * per_pass / p, Fraction(p - 1, p))


def in_rigorous_regime(p, rotation, delta):
    '''Inputs for which `turn_bound < 3*delta` is guaranteed

    With `D <= delta/4`, `p*D >= 8` and `delta <= 1/4` the turn bound is at
    most `2*delta + D + (2*delta+1)*2*delta/(p*D) + (2*delta+1)/p`, which is
    below `2.7*delta`.
    '''
    rotation = abs(Fraction(rotation)) % 1
    rotation = min(rotation, 1 - rotation)
    return bool(rotation > 0 and delta <= Fraction(1, 4)
                and rotation <= delta / 4 and p * rotation >= 8)
