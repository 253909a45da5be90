"""Step-by-step orbits"""

from chaoslab.dynamics.stepMaps import project, step, step_f
from chaoslab.general.validateKeyword import validate_keyword_big_int


def orbit(schedule, point, n, visitor=None):
    '''
    Apply F (or f) `n` times to `point`.

    Every state is computed exactly, one step at a time, so this is meant for
    truncated schedules and moderate `n`. Statistics over the long identity
    blocks of a true schedule are computed in closed form by
    `chaoslab.analysis.orbit_runs`.

    Parameters
    ----------
    schedule : Schedule
    point : CylinderPoint or FiberPoint
    n : int
        Number of steps, `n >= 0`
    visitor : callable, optional
        Called as `visitor(i, point_i)` for `i = 0 .. n`, where `point_0` is
        the starting point

    Returns
    -------
    point_n : CylinderPoint or FiberPoint

    Raises
    ------
    HorizonError
        The orbit leaves the built schedule
    '''
    n = validate_keyword_big_int(n, "n", minimum=0)
    if visitor is not None:
        visitor(0, point)
    for i in range(1, n + 1):
        point = step(schedule, point)
        if visitor is not None:
            visitor(i, point)
    return point


def semiconjugacy_check(schedule, p, n):
    '''
    True if `project(F^i(p)) == f^i(project(p))` for all `0 <= i <= n`,
    compared exactly.
    '''
    n = validate_keyword_big_int(n, "n", minimum=0)
    upstairs = p
    downstairs = project(p)
    if project(upstairs) != downstairs:
        return False
    for _ in range(n):
        upstairs = step(schedule, upstairs)
        downstairs = step_f(schedule, downstairs)
        if project(upstairs) != downstairs:
            return False
    return True
