"""Circle geometry on normed angles"""

from fractions import Fraction

from chaoslab.general.validateKeyword import validate_keyword_rational


def normalise_angle(angle):
    '''
    Reduce an angle, measured in turns, into `[0, 1)`.

    Angles are plain `Fraction` values; this is the only place where the
    representation is enforced. Python's `%` already floors for negative
    rationals, so `-1/3` maps to `2/3`.

    Parameters
    ----------
    angle : Fraction, int or str

    Returns
    -------
    angle : Fraction
        in the range [0, 1)
    '''
    return validate_keyword_rational(angle, "angle") % 1


def circle_dist(a, b):
    '''
    Distance between two normed angles on the unit circle,
    `min(|a-b|, 1-|a-b|)`.

    Parameters
    ----------
    a, b : Fraction
        Angles in turns. Values outside `[0, 1)` are reduced first

    Returns
    -------
    distance : Fraction
        In the range [0, 1/2]
    '''
    diff = (normalise_angle(a) - normalise_angle(b)) % 1
    return min(diff, 1 - diff) if diff else Fraction(0)
