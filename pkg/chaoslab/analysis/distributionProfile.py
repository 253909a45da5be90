"""
Finite-horizon distribution functions of pairs of orbits
"""

from dataclasses import dataclass
from fractions import Fraction

import chaoslab.defaults as default
from chaoslab.analysis.orbitRuns import merged_runs, orbit_runs
from chaoslab.dynamics.distance import distance
from chaoslab.dynamics.points import CylinderPoint, FiberPoint, is_limit, radius
from chaoslab.dynamics.stepMaps import step
from chaoslab.errors import ArgumentError
from chaoslab.general.arcHitCount import count_rotation_hits
from chaoslab.general.validateKeyword import validate_keyword_big_int, validate_keyword_delta_grid

#: Components of the max-metric, for each kind of point
COMPONENTS = {CylinderPoint: ("height", "radius", "angle"),
              FiberPoint: ("height", "radius")}


@dataclass(frozen=True)
class DistributionProfile:
    '''
    Count of the times `0 < t < horizon` at which two orbits are closer than
    `delta`, and the fraction `count / horizon`.

    Attributes
    ----------
    delta : Fraction
    horizon : int
    count : int
    mode : str
        "empirical" (orbits stepped one by one) or "block_exact" (closed form
        over runs)
    '''
    delta: Fraction
    horizon: int
    count: int
    mode: str

    @property
    def fraction(self):
        return Fraction(self.count, self.horizon)

    def to_dict(self):
        return {"delta": self.delta, "horizon": self.horizon, "count": self.count,
                "fraction": self.fraction, "mode": self.mode}


def _check_pair(u, v):
    if type(u) is not type(v) or type(u) not in COMPONENTS:
        raise ArgumentError("Both points must be CylinderPoints or both FiberPoints."\
                            f" You provided `{type(u)}` and `{type(v)}`")


def empirical_phi(schedule, u, v, m, deltas=None):
    '''
    Distribution profile by direct iteration of both orbits.

    Computes `#{0 < t < m : d(u_t, v_t) < delta}` for every `delta`, where
    `u_t` is the state `t` steps after `u`. Works for points of X and of Y.

    Parameters
    ----------
    schedule : Schedule
    u, v : CylinderPoint or FiberPoint
    m : int
        Horizon, `m >= 1`
    deltas : iterable of Fraction, optional
        Default `chaoslab.defaults.delta_grid`

    Returns
    -------
    profiles : list of DistributionProfile
        One per delta, in increasing order of delta

    Raises
    ------
    HorizonError
        An orbit leaves the built schedule before the horizon
    '''
    _check_pair(u, v)
    m = validate_keyword_big_int(m, "m", minimum=1)
    deltas = validate_keyword_delta_grid(deltas)
    counts = [0] * len(deltas)
    for _ in range(1, m):
        u = step(schedule, u)
        v = step(schedule, v)
        d = distance(u, v)
        for i, delta in enumerate(deltas):
            if d < delta:
                counts[i] += 1
    return [DistributionProfile(delta, m, count, "empirical")
            for delta, count in zip(deltas, counts)]


def _radius_gap(cu, cv):
    if is_limit(cu) and is_limit(cv):
        return Fraction(0)
    return abs(radius(cu) - radius(cv))


def _radius_threshold(cu, cv, delta, lo, hi):
    '''
    Smallest `j` in `[lo, hi)` with radius gap below `delta` when both
    cylinder indices advance by `j`, or `hi` if there is none. The gap is
    nonincreasing in `j`.
    '''
    def shifted(c, j):
        return c if is_limit(c) else c + j

    if _radius_gap(shifted(cu, lo), shifted(cv, lo)) < delta:
        return lo
    if _radius_gap(shifted(cu, hi - 1), shifted(cv, hi - 1)) >= delta:
        return hi
    # invariant: gap(lo) >= delta > gap(hi - 1)
    lo, hi = lo, hi - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _radius_gap(shifted(cu, mid), shifted(cv, mid)) < delta:
            hi = mid
        else:
            lo = mid
    return hi


def _piece_count(a, lo, hi, ru, rv, delta, components):
    '''Close times within `[lo, hi)`, both points inside a single run'''
    if "height" in components and abs(ru.z - rv.z) >= delta:
        return 0
    j_lo, j_hi = lo - a, hi - a
    if "radius" in components:
        j_lo = _radius_threshold(ru.cylinder_at(a), rv.cylinder_at(a), delta, j_lo, j_hi)
        if j_lo >= j_hi:
            return 0
    if "angle" in components:
        theta = rv.angle_at(a) - ru.angle_at(a)
        return count_rotation_hits(theta, rv.omega - ru.omega, delta, j_lo, j_hi)
    return j_hi - j_lo


def block_exact_phi(schedule, u, v, m, deltas=None, **kwargs):
    '''
    Distribution profile in closed form.

    Both orbits are decomposed by `orbit_runs`; on every interval where each
    point stays in one run the three terms of the max-metric are handled
    separately: the height gap is constant, the radius gap is nonincreasing
    (a binary search finds where it drops below `delta`) and the relative
    angle turns by a constant amount (counted with floor sums by
    `count_rotation_hits`). The cost is independent of the length of the
    identity blocks, so true schedules with astronomically long blocks are
    handled exactly.

    Parameters
    ----------
    schedule : Schedule
    u, v : CylinderPoint or FiberPoint
    m : int
        Horizon, `m >= 1`
    deltas : iterable of Fraction, optional
        Default `chaoslab.defaults.delta_grid`

    Other Parameters
    ----------------
    components : tuple of str, optional
        Terms of the metric to take into account, among "height", "radius"
        and "angle". Default all terms of the points' space
    mode : str, optional
        Label stored in the profiles. Default "block_exact"

    Returns
    -------
    profiles : list of DistributionProfile
        One per delta, in increasing order of delta

    Raises
    ------
    HorizonError
        An orbit leaves the built schedule before the horizon
    '''
    _check_pair(u, v)
    m = validate_keyword_big_int(m, "m", minimum=1)
    deltas = validate_keyword_delta_grid(deltas)
    components = kwargs.get("components", COMPONENTS[type(u)])
    unknown = set(components) - set(COMPONENTS[type(u)])
    if unknown:
        raise ArgumentError(f"Unknown metric components {sorted(unknown)} for `{type(u)}`")
    mode = kwargs.get("mode", "block_exact")

    counts = [0] * len(deltas)
    pieces = merged_runs(orbit_runs(schedule, u, m), orbit_runs(schedule, v, m))
    for a, b, ru, rv in pieces:
        lo = max(a, 1)
        if lo >= b:
            continue
        for i, delta in enumerate(deltas):
            counts[i] += _piece_count(a, lo, b, ru, rv, delta, components)
    return [DistributionProfile(delta, m, count, mode)
            for delta, count in zip(deltas, counts)]


def angle_phi(schedule, u, v, m, deltas=None):
    '''
    Block-exact profile of the angular term alone,
    `#{0 < t < m : rho(phi_u(t), phi_v(t)) < delta}`.

    Since the max-metric dominates its angular term, every angular fraction
    bounds the full distribution function from above.
    '''
    if not (isinstance(u, CylinderPoint) and isinstance(v, CylinderPoint)):
        raise ArgumentError("angle_phi compares two CylinderPoints")
    return block_exact_phi(schedule, u, v, m, deltas, components=("angle",),
                           mode="block_exact_angle")


def profile(schedule, u, v, m, deltas=None, **kwargs):
    '''Dispatch to `block_exact_phi` or `empirical_phi` by keyword `mode`'''
    mode = kwargs.get("mode", default.profile_mode)
    if mode not in default.profile_modes:
        raise ArgumentError(f"Profile mode '{mode}' not recognised. Use one of"\
                            f" {default.profile_modes}")
    if mode == "empirical":
        return empirical_phi(schedule, u, v, m, deltas)
    return block_exact_phi(schedule, u, v, m, deltas)
