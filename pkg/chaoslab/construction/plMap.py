"""Strictly increasing piecewise-linear self-maps of the unit interval"""

from bisect import bisect_right
from fractions import Fraction

from chaoslab.errors import ArgumentError
from chaoslab.general.validateKeyword import validate_keyword_rational, validate_keyword_big_int
from chaoslab.general.serialize import rational_to_str


class PLMap:
    '''
    Continuous, strictly increasing, piecewise-linear bijection of [0, 1]
    given by its breakpoints.

    Parameters
    ----------
    breakpoints : sequence of (x, y) pairs
        First pair (0, 0), last pair (1, 1), both coordinates strictly
        increasing. Coordinates may be Fractions, ints or "p/q" strings.

    Raises
    ------
    ArgumentError
        breakpoints do not describe an increasing bijection of [0, 1]
    '''

    def __init__(self, breakpoints):
        points = tuple((validate_keyword_rational(x, "x"), validate_keyword_rational(y, "y"))
                       for x, y in breakpoints)
        if len(points) < 2:
            raise ArgumentError("A PLMap needs at least two breakpoints")
        if points[0] != (0, 0) or points[-1] != (1, 1):
            raise ArgumentError("A PLMap must start at (0, 0) and end at (1, 1)."\
                                f" You provided {points[0]} ... {points[-1]}")
        for (x0, y0), (x1, y1) in zip(points[:-1], points[1:]):
            if not (x1 > x0 and y1 > y0):
                raise ArgumentError("Breakpoints must be strictly increasing in"\
                                    f" both coordinates: ({x0}, {y0}) -> ({x1}, {y1})")
        self.breakpoints = points
        self._xs = tuple(x for x, _ in points)
        self._slopes = tuple((y1 - y0) / (x1 - x0) for (x0, y0), (x1, y1)
                             in zip(points[:-1], points[1:]))

    def __call__(self, x):
        return apply(self, x)

    def __eq__(self, other):
        return isinstance(other, PLMap) and self.breakpoints == other.breakpoints

    def __hash__(self):
        return hash(self.breakpoints)

    def __repr__(self):
        inner = ", ".join(f"({rational_to_str(x)}, {rational_to_str(y)})"
                          for x, y in self.breakpoints)
        return f"PLMap([{inner}])"

    def inverse(self):
        '''The exact inverse: the same graph with coordinates swapped'''
        return PLMap([(y, x) for x, y in self.breakpoints])

    def sup_distance_to_identity(self):
        '''`max |h(x) - x|`, attained at a breakpoint for piecewise-linear maps'''
        return max(abs(y - x) for x, y in self.breakpoints)

    def fixed_points(self):
        '''
        All fixed points, as a sorted tuple. Raises if the map coincides with
        the identity on a whole segment (infinitely many fixed points).
        '''
        found = set()
        for (x0, y0), (x1, y1) in zip(self.breakpoints[:-1], self.breakpoints[1:]):
            d0, d1 = y0 - x0, y1 - x1
            if d0 == 0 and d1 == 0:
                raise ArgumentError(f"Map is the identity on [{x0}, {x1}]")
            if d0 == 0:
                found.add(x0)
            if d1 == 0:
                found.add(x1)
            if d0 * d1 < 0:
                found.add(x0 + (x1 - x0) * d0 / (d0 - d1))
        return tuple(sorted(found))

    def to_dict(self):
        return {"breakpoints": [[x, y] for x, y in self.breakpoints]}


#: The identity map, acting on identity blocks
IDENTITY = PLMap([(0, 0), (1, 1)])


def apply(pl_map, x):
    '''
    Evaluate a piecewise-linear map exactly.

    Parameters
    ----------
    pl_map : PLMap
    x : Fraction
        Point of [0, 1]

    Returns
    -------
    y : Fraction
        In the range [0, 1]

    Raises
    ------
    ArgumentError
        x outside [0, 1]
    '''
    x = validate_keyword_rational(x, "x")
    if not 0 <= x <= 1:
        raise ArgumentError(f"PLMap is defined on [0, 1]. You provided {x}")
    if x == 1:
        return Fraction(1)
    index = bisect_right(pl_map._xs, x) - 1
    x0, y0 = pl_map.breakpoints[index]
    return y0 + (x - x0) * pl_map._slopes[index]


def iterate(pl_map, x, n):
    '''
    `n`-fold application of a piecewise-linear map, `n >= 0`. Fixed points
    and the identity map short-circuit, so huge `n` is fine for those.
    '''
    n = validate_keyword_big_int(n, "n", minimum=0)
    x = validate_keyword_rational(x, "x")
    if n == 0 or pl_map == IDENTITY:
        return _checked(x)
    for _ in range(n):
        y = apply(pl_map, x)
        if y == x:
            break
        x = y
    return x


def _checked(x):
    if not 0 <= x <= 1:
        raise ArgumentError(f"PLMap is defined on [0, 1]. You provided {x}")
    return x
