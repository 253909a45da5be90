"""
Decompose orbits into runs on which the state evolves linearly
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from chaoslab.construction.plMap import apply
from chaoslab.construction.schedule import rotation_divisor
from chaoslab.dynamics.points import LIMIT, CylinderPoint, FiberPoint, is_limit
from chaoslab.errors import ArgumentError, HorizonError
from chaoslab.general.validateKeyword import validate_keyword_big_int


@dataclass(frozen=True)
class Run:
    '''
    Times `start <= t < stop` during which a point moves by one cylinder and a
    constant angle `omega` per step while its height `z` stays fixed.

    At time `t` the point is on cylinder `cyl + (t - start)` (or on the limit
    cylinder) at angle `phi + (t - start)*omega`. `z_next` is the height after
    the last step of the run.
    '''
    start: int
    stop: int
    cyl: Union[int, str]
    phi: Fraction
    z: Fraction
    omega: Fraction
    z_next: Fraction
    phase: str

    @property
    def length(self):
        return self.stop - self.start

    def cylinder_at(self, t):
        if is_limit(self.cyl):
            return LIMIT
        return self.cyl + (t - self.start)

    def angle_at(self, t):
        return (self.phi + (t - self.start) * self.omega) % 1


def orbit_runs(schedule, point, t_stop):
    '''
    Runs covering the times `0 <= t < t_stop` of the orbit of `point`.

    An identity block is a single run of any length: the height is frozen and
    the angle turns by the constant `z/l`. Each step of an H or HINV block is
    a run of length one. A point on the limit cylinder is one run with
    `omega = 0`. The number of runs is therefore bounded by twice the sum of
    the escape times `n_l`, whatever the length of the identity blocks.

    Parameters
    ----------
    schedule : Schedule
    point : CylinderPoint or FiberPoint
        State at time 0. Points of Y have no angle; their runs carry
        `phi = omega = 0`
    t_stop : int

    Yields
    ------
    run : Run

    Raises
    ------
    HorizonError
        A state before `t_stop` lies beyond the cylinder `schedule.horizon`.
        The state on that cylinder is the first one the schedule cannot step;
        it closes the orbit as a run of length one with phase "END"
    '''
    t_stop = validate_keyword_big_int(t_stop, "t_stop", minimum=0)
    if not isinstance(point, (CylinderPoint, FiberPoint)):
        raise ArgumentError(f"orbit_runs needs a point, not `{type(point)}`")
    has_angle = isinstance(point, CylinderPoint)
    phi = point.phi if has_angle else Fraction(0)
    z = point.z
    if t_stop == 0:
        return
    if is_limit(point.cyl):
        yield Run(0, t_stop, LIMIT, phi, z, Fraction(0), z, "LIMIT")
        return
    c0 = point.cyl
    # the last state is only looked at, never stepped
    if c0 + t_stop - 1 > schedule.horizon:
        raise HorizonError(f"The orbit from cylinder {c0} needs cylinders up to"\
                           f" {c0 + t_stop - 1}; the schedule ends at {schedule.horizon}")
    t = 0
    while t < t_stop:
        k = c0 + t
        if k == schedule.horizon:
            yield Run(t, t + 1, k, phi, z, Fraction(0), z, "END")
            return
        rec = schedule.level_of(k)
        block = rec.block_of(k)
        omega = z / rotation_divisor(rec.l) if has_angle else Fraction(0)
        if block.phase == "ID":
            stop = min(t_stop, t + block.end - k)
            yield Run(t, stop, k, phi, z, omega, z, "ID")
            phi = (phi + (stop - t) * omega) % 1
            t = stop
        else:
            g = rec.maps.h if block.phase == "H" else rec.maps.h_inv
            z_next = apply(g, z)
            yield Run(t, t + 1, k, phi, z, omega, z_next, block.phase)
            phi = (phi + omega) % 1
            z = z_next
            t += 1


def advance(schedule, point, n):
    '''
    The state `n` steps after `point`, computed run by run.

    Identity blocks are crossed in one multiplication, so `n` may be
    astronomically large as long as the schedule covers it.
    '''
    n = validate_keyword_big_int(n, "n", minimum=0)
    if n == 0 or is_limit(point.cyl):
        return point
    if point.cyl + n > schedule.horizon:
        raise HorizonError(f"Advancing {n} steps from cylinder {point.cyl} needs the"\
                           f" maps up to cylinder {point.cyl + n - 1}; the schedule ends"\
                           f" at {schedule.horizon - 1}")
    last = None
    for last in orbit_runs(schedule, point, n):
        pass
    cyl = last.cyl + last.length
    if isinstance(point, CylinderPoint):
        return CylinderPoint(cyl, last.phi + last.length * last.omega, last.z_next)
    return FiberPoint(cyl, last.z_next)


def merged_runs(runs_u, runs_v):
    '''
    Pair up two run sequences covering the same times.

    Yields `(a, b, run_u, run_v)` for the maximal intervals `[a, b)` on
    which both points stay within one run.
    '''
    runs_u, runs_v = iter(runs_u), iter(runs_v)
    ru, rv = next(runs_u, None), next(runs_v, None)
    a = 0
    while ru is not None and rv is not None:
        b = min(ru.stop, rv.stop)
        if b > a:
            yield a, b, ru, rv
        a = b
        if ru.stop == b:
            ru = next(runs_u, None)
        if rv.stop == b:
            rv = next(runs_v, None)
