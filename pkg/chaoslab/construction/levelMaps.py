"""
The maps h_l with fixed points {0, r_l, 1}, their escape times and margins
"""

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

import chaoslab.defaults as default
from chaoslab.construction.plMap import PLMap, iterate
from chaoslab.errors import ArgumentError, ConstraintError
from chaoslab.general.validateKeyword import validate_keyword_rational


@dataclass(frozen=True)
class LevelMaps:
    '''
    Everything that is attached to one level of the construction.

    Attributes
    ----------
    l : int
        Level index, from 0
    r : Fraction
        Repelling fixed point r_l in (0, 1)
    alpha : Fraction
        `max |h - Id|`
    h : PLMap
    h_inv : PLMap
    n : int or None
        Escape time n_l. None until `compute_n_l` has been run
    eps : Fraction or None
        Margin eps_l. None until `compute_eps_l` has been run
    '''
    l: int
    r: Fraction
    alpha: Fraction
    h: PLMap
    h_inv: PLMap
    n: Optional[int] = None
    eps: Optional[Fraction] = None

    @property
    def threshold(self):
        return level_threshold(self.l)

    def to_dict(self):
        return {"l": self.l, "r": self.r, "alpha": self.alpha, "n": self.n,
                "eps": self.eps, "h": self.h.to_dict()}


def level_threshold(l):
    '''`1/l`, with level 0 using the thresholds of level 1'''
    return Fraction(1, max(int(l), 1))


def make_h(l, r_l):
    '''
    Build the map h_l of level `l`.

    h_l is the piecewise-linear map through (0, 0), (r/2, r/2 - alpha),
    (r, r), ((1+r)/2, (1+r)/2 + alpha) and (1, 1) with
    `alpha = min(r, 1-r) / (2(l+2))`. It is strictly increasing because
    `alpha < min(r, 1-r)/2`, it pushes points away from r towards the
    endpoints, and `max |h_l - Id| = alpha` tends to 0 with l.

    Parameters
    ----------
    l : int
        Level, `l >= 0`
    r_l : Fraction
        Fixed point in (0, 1)

    Returns
    -------
    maps : LevelMaps
        With `n` and `eps` still unset

    Raises
    ------
    ArgumentError
        r_l outside (0, 1), or negative level
    '''
    r = validate_keyword_rational(r_l, "r_l")
    l = int(l)
    if l < 0:
        raise ArgumentError(f"Levels start at 0. You provided {l}")
    if not 0 < r < 1:
        raise ArgumentError(f"r_l must lie in (0, 1). You provided {r}")
    alpha = min(r, 1 - r) / (2 * (l + 2))
    h = PLMap([(0, 0),
               (r / 2, r / 2 - alpha),
               (r, r),
               ((1 + r) / 2, (1 + r) / 2 + alpha),
               (1, 1)])
    return LevelMaps(l=l, r=r, alpha=alpha, h=h, h_inv=h.inverse())


def escape_endpoints(maps):
    '''
    The interval endpoints `r - 1/l` and `r + 1/l` whose images decide the
    inclusions of the escape condition. An endpoint outside (0, 1) makes
    its condition vacuous and is returned as None.
    '''
    t = maps.threshold
    lower = maps.r - t if maps.r - t > 0 else None
    upper = maps.r + t if maps.r + t < 1 else None
    return lower, upper


def escape_holds(maps, n):
    '''True if h^n pushes [0, r-1/l] below 1/l and [r+1/l, 1] above 1-1/l'''
    t = maps.threshold
    lower, upper = escape_endpoints(maps)
    ok_lower = lower is None or iterate(maps.h, lower, n) < t
    ok_upper = upper is None or iterate(maps.h, upper, n) > 1 - t
    return ok_lower and ok_upper


def compute_n_l(maps, l, **kwargs):
    '''
    Smallest escape time `n >= 1` with
    `h^n([0, r-1/l]) < 1/l` and `h^n([r+1/l, 1]) > 1-1/l`.

    By monotonicity of h only the endpoints `r -+ 1/l` need checking. The
    endpoints lie strictly on the repelling sides of r and h has no other
    fixed points there, so the search terminates.

    The search starts at n = 1, so n_l is never 0. When the inclusions
    already hold at n = 0 the result is 1 and there is no failing n_l - 1:
    at level 2 with r = 2/3 the lower endpoint 1/6 is already below 1/2
    and the upper endpoint lies outside (0, 1).

    Parameters
    ----------
    maps : LevelMaps
    l : int
        Level, `l >= 0` (level 0 uses the thresholds of level 1)
    debug : bool, optional

    Returns
    -------
    n : int
    '''
    debug = kwargs.get("debug", False)
    max_steps = kwargs.get("max_escape_steps", default.max_escape_steps)
    if int(l) != maps.l:
        raise ArgumentError(f"Level mismatch: maps of level {maps.l}, asked for {l}")
    t = maps.threshold
    lower, upper = escape_endpoints(maps)
    x_low, x_up = lower, upper
    n = 0
    while True:
        n += 1
        if x_low is not None:
            x_low = maps.h(x_low)
        if x_up is not None:
            x_up = maps.h(x_up)
        low_ok = x_low is None or x_low < t
        up_ok = x_up is None or x_up > 1 - t
        if low_ok and up_ok:
            break
        if n >= max_steps:
            raise ConstraintError(f"No escape time below {max_steps} for level {l}")
    if debug:
        print(f"level {l}: r = {maps.r}, endpoints {lower}, {upper}, n = {n}")
    return n


def compute_eps_l(maps, l):
    '''
    Margin `eps_l = min(h^n(1/l), 1 - h^n(1 - 1/l))`, with `n = n_l`.

    Parameters
    ----------
    maps : LevelMaps
        With `n` already computed
    l : int

    Returns
    -------
    eps : Fraction
        In (0, 1]
    '''
    if maps.n is None:
        raise ArgumentError("compute_eps_l requires n_l: run compute_n_l first")
    if int(l) != maps.l:
        raise ArgumentError(f"Level mismatch: maps of level {maps.l}, asked for {l}")
    t = maps.threshold
    return min(iterate(maps.h, t, maps.n), 1 - iterate(maps.h, 1 - t, maps.n))


def build_level(l, r_l, **kwargs):
    '''make_h followed by compute_n_l and compute_eps_l'''
    maps = make_h(l, r_l)
    maps = replace(maps, n=compute_n_l(maps, l, **kwargs))
    return replace(maps, eps=compute_eps_l(maps, l))
