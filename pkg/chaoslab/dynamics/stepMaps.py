"""The maps F on X and f on Y, and the projection between them"""

from chaoslab.construction.plMap import apply
from chaoslab.construction.schedule import resolve_g, resolve_psi
from chaoslab.dynamics.points import CylinderPoint, FiberPoint, is_limit
from chaoslab.errors import ArgumentError


def step_F(schedule, p):
    '''
    One step of F.

    The limit cylinder is fixed pointwise. A point on cylinder `k` moves to
    cylinder `k+1`, its angle turns by `Psi(k, z)` and its height becomes
    `g_k(z)`. The angle uses the height before the step.

    Parameters
    ----------
    schedule : Schedule
    p : CylinderPoint

    Returns
    -------
    CylinderPoint

    Raises
    ------
    HorizonError
        `p.cyl` is beyond the built schedule
    '''
    if not isinstance(p, CylinderPoint):
        raise ArgumentError(f"step_F acts on CylinderPoints, not `{type(p)}`")
    if is_limit(p.cyl):
        return p
    _, g = resolve_g(schedule, p.cyl)
    psi = resolve_psi(schedule, p.cyl, p.z)
    return CylinderPoint(p.cyl + 1, p.phi + psi, apply(g, p.z))


def step_f(schedule, q):
    '''One step of f: the limit fiber is fixed, `(k, z) -> (k+1, g_k(z))`'''
    if not isinstance(q, FiberPoint):
        raise ArgumentError(f"step_f acts on FiberPoints, not `{type(q)}`")
    if is_limit(q.cyl):
        return q
    _, g = resolve_g(schedule, q.cyl)
    return FiberPoint(q.cyl + 1, apply(g, q.z))


def project(p):
    '''The semiconjugacy X -> Y, which forgets the angle'''
    if not isinstance(p, CylinderPoint):
        raise ArgumentError(f"project acts on CylinderPoints, not `{type(p)}`")
    return FiberPoint(p.cyl, p.z)


def step(schedule, point):
    '''step_F or step_f, depending on the type of the point'''
    if isinstance(point, CylinderPoint):
        return step_F(schedule, point)
    return step_f(schedule, point)
