"""Interpret rational-valued keywords"""

from fractions import Fraction
import numbers

import chaoslab.defaults as default
from chaoslab.errors import ArgumentError


def validate_keyword_rational(kwv, name="value"):
    '''
    Decipher the possible meanings of a rational-valued keyword.

    Rationals may be given as `Fraction`, as `int`, or as a string "p/q"
    (or "p"). Floating point values are refused: they would silently
    introduce rounding into an exact computation.

    Parameters
    ----------
    kwv : Fraction, int or str
        The value given for the keyword
    name : str
        Name of the keyword, used in error messages

    Returns
    -------
    value : Fraction

    Raises
    ------
    ArgumentError
    '''
    if isinstance(kwv, bool):
        raise ArgumentError(f"Keyword '{name}' must be rational, not a boolean")
    if isinstance(kwv, Fraction):
        return kwv
    if isinstance(kwv, numbers.Integral):
        return Fraction(int(kwv))
    if isinstance(kwv, str):
        text = kwv.strip()
        try:
            if "." in text or "e" in text.lower():
                raise ValueError
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ArgumentError(f"Keyword '{name}' value '{kwv}' is not a"\
                                " rational of the form 'p/q'")
    raise ArgumentError(f"Keyword '{name}' value not understood. Provide a"\
                        f" Fraction, an int or a 'p/q' string, not"\
                        f" type `{type(kwv)}`")


def validate_keyword_big_int(kwv, name="value", minimum=None):
    '''Interpret an integer keyword that may be given as a decimal string

    Big integers travel through JSON as decimal strings, hence the string form.
    '''
    if isinstance(kwv, bool):
        raise ArgumentError(f"Keyword '{name}' must be an integer, not a boolean")
    if isinstance(kwv, numbers.Integral):
        value = int(kwv)
    elif isinstance(kwv, str) and kwv.strip().lstrip("-").isdigit():
        value = int(kwv.strip())
    else:
        raise ArgumentError(f"Keyword '{name}' value '{kwv}' is not an integer")
    if minimum is not None and value < minimum:
        raise ArgumentError(f"Keyword '{name}' must be at least {minimum}."\
                            f" You provided {value}")
    return value


def validate_keyword_delta(kwv, name="delta"):
    '''
    Ensure that a distance threshold is a meaningful value

    Parameters
    ----------
    kwv : Fraction, int or str
        The value given for the threshold

    Returns
    -------
    delta : Fraction
        Strictly positive threshold
    '''
    delta = validate_keyword_rational(kwv, name)
    if delta <= 0:
        raise ArgumentError(f"Keyword '{name}' must be greater than zero"\
                            f" (value given {delta})")
    return delta


def validate_keyword_delta_grid(kwv):
    '''
    Ensure that a grid of thresholds is meaningful. The grid is returned
    sorted and without duplicates.
    '''
    if kwv is None:
        kwv = default.delta_grid
    if isinstance(kwv, (str, Fraction, numbers.Integral)):
        kwv = (kwv,)
    if not isinstance(kwv, (tuple, list)):
        raise ArgumentError("Keyword 'delta_grid' must be a list of rationals."\
                            f" You provided type `{type(kwv)}`")
    if len(kwv) == 0:
        raise ArgumentError("Keyword 'delta_grid' is empty")
    return tuple(sorted(set(validate_keyword_delta(d, "delta_grid") for d in kwv)))


def validate_keyword_unit(kwv, name="value"):
    '''A rational in the closed unit interval [0, 1]'''
    value = validate_keyword_rational(kwv, name)
    if not 0 <= value <= 1:
        raise ArgumentError(f"Keyword '{name}' must be in the range [0, 1]."\
                            f" You provided {value}")
    return value
