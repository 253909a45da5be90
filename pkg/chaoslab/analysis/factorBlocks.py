"""
Witness blocks of the scrambled pairs of the factor Y
"""

from fractions import Fraction

from chaoslab.construction.levelMaps import level_threshold
from chaoslab.construction.plMap import iterate
from chaoslab.construction.rationalEnumeration import rational_enumeration
from chaoslab.construction.schedule import level_record
from chaoslab.errors import ArgumentError, HorizonError
from chaoslab.general.validateKeyword import (validate_keyword_big_int,
                                              validate_keyword_delta_grid,
                                              validate_keyword_unit)

#: Witnesses are only meaningful once 1/l < 1/2
FIRST_WITNESS_LEVEL = 2


def _check_heights(z_u, z_v):
    z_u = validate_keyword_unit(z_u, "z_u")
    z_v = validate_keyword_unit(z_v, "z_v")
    if z_u == z_v:
        raise ArgumentError("The two heights must differ")
    return z_u, z_v


def _window(rec, distance, delta):
    '''
    Bounds of the window fraction at horizon `m3 - 1` for a pair that starts
    on cylinder 1, knowing only the constant distance on the identity block.
    The other indices count as hits for the upper bound and as misses for
    the lower bound.
    '''
    horizon = rec.m3 - 1
    others = rec.m2 - 2
    if distance < delta:
        return {"horizon": horizon, "lower": Fraction(rec.gap, horizon),
                "upper": Fraction(others + rec.gap, horizon), "close": True}
    return {"horizon": horizon, "lower": Fraction(0),
            "upper": Fraction(others, horizon), "close": False}


def factor_block_profile(schedule, z_u, z_v, levels=None, deltas=None, **kwargs):
    '''
    Follow two heights of fiber 1 through the blocks of the schedule.

    The heights are pushed through every level in schedule order: `n_l`
    iterations of h_l, the identity block, then `n_l` iterations of the
    inverse of h_l. On the identity block of level `l` the two orbits keep a
    constant distance, which decides whether the whole block is close or far
    at a given delta. The block is of s-type when both heights are below
    `1/l` or both above `1 - 1/l` (distance below `1/l`), and of q-type when
    they lie on opposite sides (distance above `1 - 2/l`).

    Parameters
    ----------
    schedule : Schedule
    z_u, z_v : Fraction
        Distinct heights on fiber 1 at time 0
    levels : iterable of int, optional
        Levels to report. Default all built levels
    deltas : iterable of Fraction, optional
        Thresholds for the window bounds. Default `chaoslab.defaults.delta_grid`
    debug : bool, optional

    Returns
    -------
    report : list of dict
        One entry per requested level with the heights at level entry and on
        the identity block, the block distance, the block length, the block
        type ("s", "q" or None), whether the heights returned exactly to
        their entry values after the level, and the window bounds per delta
    '''
    z_u, z_v = _check_heights(z_u, z_v)
    deltas = validate_keyword_delta_grid(deltas)
    debug = kwargs.get("debug", False)
    wanted = set(range(len(schedule))) if levels is None else set(levels)
    missing = [l for l in wanted if l >= len(schedule) or l < 0]
    if missing:
        raise HorizonError(f"Levels {sorted(missing)} were not built")

    report = []
    if not wanted:
        return report
    for rec in schedule.levels:
        if rec.l > max(wanted):
            break
        maps = rec.maps
        id_u = iterate(maps.h, z_u, maps.n)
        id_v = iterate(maps.h, z_v, maps.n)
        out_u = iterate(maps.h_inv, id_u, maps.n)
        out_v = iterate(maps.h_inv, id_v, maps.n)
        if rec.l in wanted:
            distance = abs(id_u - id_v)
            entry = {"l": rec.l,
                     "entry": (z_u, z_v),
                     "id_heights": (id_u, id_v),
                     "distance": distance,
                     "block_length": rec.gap,
                     "type": _block_type(id_u, id_v, rec.l),
                     "returned": (out_u, out_v) == (z_u, z_v),
                     "windows": {delta: _window(rec, distance, delta) for delta in deltas}}
            report.append(entry)
            if debug:
                print(f"level {rec.l}: identity block distance {float(distance):.4g},"\
                      f" type {entry['type']}")
        z_u, z_v = out_u, out_v
    return report


def _block_type(id_u, id_v, l):
    if l < FIRST_WITNESS_LEVEL:
        return None
    t = level_threshold(l)
    sides = [(-1 if z < t else 1 if z > 1 - t else 0) for z in (id_u, id_v)]
    if 0 in sides:
        return None
    return "s" if sides[0] == sides[1] else "q"


def entry_side(z, r, l):
    '''
    Side of a height at the entry of level `l` relative to `(r - 1/l, r + 1/l)`:
    -1 if the escape inclusion sends it below `1/l`, +1 if above `1 - 1/l`,
    0 otherwise. The fixed points 0 and 1 always have a side.
    '''
    t = level_threshold(l)
    if z == 0 or z <= r - t:
        return -1
    if z == 1 or z >= r + t:
        return 1
    return 0


def find_dc1_witness_blocks(schedule, z_u, z_v, L_max):
    '''
    Levels at which two heights of fiber 1 approach (s-type) or separate
    (q-type).

    Both points return to their starting heights after every complete
    level, so the heights entering level `l` are `z_u` and `z_v` themselves.
    When both lie on the same side of `(r_l - 1/l, r_l + 1/l)` the escape
    inclusion brings them within `1/l` of each other on the identity block;
    when they lie on opposite sides it drives them more than `1 - 2/l` apart.
    Only the rationals `r_l` are needed, so levels beyond the built schedule
    are scanned as well.

    Parameters
    ----------
    schedule : Schedule
    z_u, z_v : Fraction
        Distinct heights
    L_max : int
        Highest level scanned. Levels below 2 carry no information

    Returns
    -------
    s_levels : list of int
    q_levels : list of int
        Both empty when no witness exists up to `L_max`, which is not a
        refutation
    '''
    z_u, z_v = _check_heights(z_u, z_v)
    L_max = validate_keyword_big_int(L_max, "L_max", minimum=0)
    s_levels, q_levels = [], []
    for l in range(FIRST_WITNESS_LEVEL, L_max + 1):
        r = schedule.levels[l].maps.r if l < len(schedule) else rational_enumeration(l + 1)
        side_u, side_v = entry_side(z_u, r, l), entry_side(z_v, r, l)
        if side_u == 0 or side_v == 0:
            continue
        if side_u == side_v:
            s_levels.append(l)
        else:
            q_levels.append(l)
    return s_levels, q_levels


def witness_windows(schedule, s_levels, q_levels):
    '''
    Window bounds implied by witness blocks alone, for the built levels.

    An s-type level `l` puts the whole identity block within `1/l`, so at any
    `delta > 1/l` the window fraction at horizon `m3 - 1` is at least
    `(m3 - m2)/(m3 - 1)`. A q-type level keeps the block more than
    `1 - 2/l` apart, so at any `delta <= 1 - 2/l` the window fraction is at
    most `(m2 - 2)/(m3 - 1)`.
    '''
    windows = []
    for kind, levels in (("s", s_levels), ("q", q_levels)):
        for l in levels:
            if l >= len(schedule):
                continue
            rec = level_record(schedule, l)
            horizon = rec.m3 - 1
            if kind == "s":
                windows.append({"l": l, "type": "s", "horizon": horizon,
                                "delta_above": level_threshold(l),
                                "phistar_lower": Fraction(rec.gap, horizon)})
            else:
                windows.append({"l": l, "type": "q", "horizon": horizon,
                                "delta_at_most": 1 - 2 * level_threshold(l),
                                "phi_upper": Fraction(rec.m2 - 2, horizon)})
    return sorted(windows, key=lambda w: (w["l"], w["type"]))
