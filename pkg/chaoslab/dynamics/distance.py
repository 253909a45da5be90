"""Max-metrics of X and Y"""

from chaoslab.dynamics.points import CylinderPoint, FiberPoint
from chaoslab.errors import ArgumentError
from chaoslab.general.circleDistance import circle_dist


def dist_X(u, v):
    '''
    `max(|r_u - r_v|, |z_u - z_v|, rho(phi_u, phi_v))` for two points of X,
    with `r` the cylinder radius and `rho` the circle distance of the angles
    '''
    if not (isinstance(u, CylinderPoint) and isinstance(v, CylinderPoint)):
        raise ArgumentError("dist_X compares two CylinderPoints")
    return max(abs(u.radius - v.radius), abs(u.z - v.z), circle_dist(u.phi, v.phi))


def dist_Y(u, v):
    '''`max(|r_u - r_v|, |z_u - z_v|)` for two points of Y'''
    if not (isinstance(u, FiberPoint) and isinstance(v, FiberPoint)):
        raise ArgumentError("dist_Y compares two FiberPoints")
    return max(abs(u.radius - v.radius), abs(u.z - v.z))


def distance(u, v):
    '''dist_X or dist_Y, depending on the type of the points'''
    if isinstance(u, CylinderPoint):
        return dist_X(u, v)
    return dist_Y(u, v)
