"""States of the cylinder system X and of its factor Y"""

from dataclasses import dataclass
from fractions import Fraction
import json
from typing import Union

from chaoslab.errors import ArgumentError
from chaoslab.general.circleDistance import normalise_angle
from chaoslab.general.validateKeyword import (validate_keyword_big_int,
                                              validate_keyword_rational,
                                              validate_keyword_unit)

#: Index of the limit cylinder (radius 2), which F fixes pointwise
LIMIT = "limit"


def validate_cylinder(cyl):
    '''Accept a positive integer (or its decimal string), or LIMIT'''
    if isinstance(cyl, str) and cyl.strip().lower() == LIMIT:
        return LIMIT
    return validate_keyword_big_int(cyl, "cyl", minimum=1)


def is_limit(cyl):
    return cyl == LIMIT


def radius(cyl):
    '''`2 - 1/k` on cylinder `k`, 2 on the limit cylinder'''
    if is_limit(cyl):
        return Fraction(2)
    return 2 - Fraction(1, cyl)


@dataclass(frozen=True)
class FiberPoint:
    '''
    Point of Y: height `z` on the unit fiber of cylinder index `cyl`.
    '''
    cyl: Union[int, str]
    z: Fraction

    def __post_init__(self):
        object.__setattr__(self, "cyl", validate_cylinder(self.cyl))
        object.__setattr__(self, "z", validate_keyword_unit(self.z, "z"))

    @property
    def radius(self):
        return radius(self.cyl)

    def to_dict(self):
        return {"k": self.cyl, "z": self.z}


@dataclass(frozen=True)
class CylinderPoint:
    '''
    Point of X: angle `phi` (in turns, kept in [0, 1)) and height `z` on the
    cylinder of index `cyl`.
    '''
    cyl: Union[int, str]
    phi: Fraction
    z: Fraction

    def __post_init__(self):
        object.__setattr__(self, "cyl", validate_cylinder(self.cyl))
        object.__setattr__(self, "phi", normalise_angle(validate_keyword_rational(self.phi, "phi")))
        object.__setattr__(self, "z", validate_keyword_unit(self.z, "z"))

    @property
    def radius(self):
        return radius(self.cyl)

    def to_dict(self):
        return {"k": self.cyl, "phi": self.phi, "z": self.z}


def point_from_literal(literal):
    '''
    Build a point from its JSON literal.

    `{"k": "1", "phi": "1/3", "z": "2/5"}` gives a CylinderPoint, a literal
    without "phi" gives a FiberPoint. `k` may be "limit". A string argument
    is parsed as JSON first.
    '''
    if isinstance(literal, str):
        try:
            literal = json.loads(literal)
        except ValueError as err:
            raise ArgumentError(f"Point literal is not JSON: {err}")
    if not isinstance(literal, dict) or "k" not in literal or "z" not in literal:
        raise ArgumentError("A point literal needs the keys 'k' and 'z' (and"\
                            f" 'phi' for the cylinder system). You provided {literal}")
    unknown = set(literal) - {"k", "phi", "z"}
    if unknown:
        raise ArgumentError(f"Unknown keys in point literal: {sorted(unknown)}")
    if "phi" in literal:
        return CylinderPoint(literal["k"], literal["phi"], literal["z"])
    return FiberPoint(literal["k"], literal["z"])
