""" Provide the running extremes of the distance between two orbits """

from chaoslab.dynamics.distance import distance
from chaoslab.dynamics.stepMaps import step
from chaoslab.errors import ArgumentError
from chaoslab.general.validateKeyword import validate_keyword_big_int


def li_yorke_check(schedule, u, v, horizon):
    '''
    Smallest and largest distance between the orbits of `u` and `v` over the
    times `0 <= t < horizon`.

    A scrambled pair in the sense of Li and Yorke has lim inf of the distance
    equal to zero and lim sup positive. Over a finite horizon the running
    minimum and maximum are the available proxies.

    Parameters
    ----------
    schedule : Schedule
    u, v : CylinderPoint or FiberPoint
    horizon : int
        Number of states compared, `horizon >= 1`

    Returns
    -------
    report : dict
        min_distance, argmin, max_distance, argmax, horizon
    '''
    if u == v:
        raise ArgumentError("The two points must differ")
    horizon = validate_keyword_big_int(horizon, "horizon", minimum=1)
    d = distance(u, v)
    low, arg_low, high, arg_high = d, 0, d, 0
    for t in range(1, horizon):
        u, v = step(schedule, u), step(schedule, v)
        d = distance(u, v)
        if d < low:
            low, arg_low = d, t
        if d > high:
            high, arg_high = d, t
    return {"min_distance": low, "argmin": arg_low, "max_distance": high,
            "argmax": arg_high, "horizon": horizon}
