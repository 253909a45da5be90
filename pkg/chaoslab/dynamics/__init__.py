from chaoslab.dynamics.points import (LIMIT, CylinderPoint, FiberPoint,
        point_from_literal, is_limit, radius)
from chaoslab.dynamics.distance import dist_X, dist_Y, distance
from chaoslab.dynamics.stepMaps import step_F, step_f, project, step
from chaoslab.dynamics.orbit import orbit, semiconjugacy_check


__all__ = ['LIMIT', 'CylinderPoint', 'FiberPoint', 'point_from_literal',
           'is_limit', 'radius', 'dist_X', 'dist_Y', 'distance', 'step_F',
           'step_f', 'project', 'step', 'orbit', 'semiconjugacy_check']
