"""
Block schedule of the maps g_k and of the rotation angles Psi(k, z)
"""

from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
import math
from typing import Optional

import chaoslab.defaults as default
from chaoslab.construction.levelMaps import LevelMaps, build_level, escape_holds, compute_eps_l
from chaoslab.construction.plMap import IDENTITY
from chaoslab.construction.rationalEnumeration import rational_enumeration
from chaoslab.errors import CertificateError, ConstraintError, HorizonError
from chaoslab.general.validateKeyword import validate_keyword_big_int, validate_keyword_unit

#: Phases of a level, in time order
PHASES = ("H", "ID", "HINV")


@dataclass(frozen=True)
class BlockDescriptor:
    '''Half-open block [start, end) of cylinder indices sharing one map'''
    l: int
    phase: str
    start: int
    end: int

    @property
    def length(self):
        return self.end - self.start

    def __contains__(self, k):
        return self.start <= k < self.end


@dataclass(frozen=True)
class LevelRecord:
    '''
    One level of the schedule: the blocks [m1, m2), [m2, m3), [m3, m4) on
    which g_k is h_l, the identity and the inverse of h_l.
    '''
    l: int
    maps: LevelMaps
    m1: int
    m2: int
    m3: int
    m4: int

    @property
    def gap(self):
        return self.m3 - self.m2

    @property
    def blocks(self):
        return (BlockDescriptor(self.l, "H", self.m1, self.m2),
                BlockDescriptor(self.l, "ID", self.m2, self.m3),
                BlockDescriptor(self.l, "HINV", self.m3, self.m4))

    def block_of(self, k):
        for block in self.blocks:
            if k in block:
                return block
        raise HorizonError(f"Cylinder {k} is not part of level {self.l}")

    def to_dict(self):
        return {"l": self.l, "r": self.maps.r, "alpha": self.maps.alpha,
                "n": self.maps.n, "eps": self.maps.eps,
                "m": [self.m1, self.m2, self.m3, self.m4]}


@dataclass(frozen=True)
class Schedule:
    '''
    The built levels of the schedule.

    Attributes
    ----------
    levels : tuple of LevelRecord
        Levels 0 .. L-1, tiling the cylinder indices [1, horizon)
    truncated : bool
        True if identity blocks were clamped to `cap`. Truncated schedules
        only serve simulation; no certificate is issued from them
    cap : int or None
    '''
    levels: tuple
    truncated: bool = False
    cap: Optional[int] = None
    _starts: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        object.__setattr__(self, "_starts", tuple(rec.m1 for rec in self.levels))

    def __len__(self):
        return len(self.levels)

    @property
    def horizon(self):
        '''First cylinder index for which no map is known'''
        return self.levels[-1].m4

    def level_of(self, k):
        '''The LevelRecord whose blocks contain cylinder index `k`'''
        k = validate_keyword_big_int(k, "k")
        if k < 1 or k >= self.horizon:
            raise HorizonError(f"Cylinder index {k} is outside the built schedule"\
                               f" [1, {self.horizon}). Build more levels.")
        return self.levels[bisect_right(self._starts, k) - 1]

    def to_dict(self):
        return {"levels": [rec.to_dict() for rec in self.levels],
                "truncated": self.truncated, "cap": self.cap}


def identity_gap(l, m2, eps):
    '''
    Length of the identity block of level `l`

    `max(floor(2l/eps) + 1, (l+1)*m2)`, and `max(3, m2)` at level 0. The first
    term gives `m3 - m2 > 2l/eps`, the second keeps `m2/m3 <= 1/(l+1)`.
    '''
    if l == 0:
        return max(3, m2)
    return max(math.floor(2 * l / eps) + 1, (l + 1) * m2)


def build_schedule(L, **kwargs):
    '''
    Build the first `L` levels of the schedule.

    Level `l` uses `r_l = rational_enumeration(l + 1)`. Starting from
    `m1 = 1`, each level sets `m2 = m1 + n_l`, `m3 = m2 + gap_l`,
    `m4 = m3 + n_l`, and the next level starts at `m4`. All constraints are
    verified before the schedule is returned.

    Parameters
    ----------
    L : int
        Number of levels, `L >= 1`

    Other Parameters
    ----------------
    cap : int, optional
        Clamp every identity block to at most `cap` indices. The result is
        flagged `truncated`. Default None (true schedule)
    debug : bool, optional
        Print the numbers of every level. Default False

    Returns
    -------
    schedule : Schedule

    Raises
    ------
    ArgumentError
        L < 1, or cap < 1
    ConstraintError
        Should never happen: a built schedule violates a constraint
    '''
    L = validate_keyword_big_int(L, "L", minimum=1)
    cap = kwargs.get("cap", default.cap)
    debug = kwargs.get("debug", False)
    if cap is not None:
        cap = validate_keyword_big_int(cap, "cap", minimum=1)

    levels = []
    m1 = 1
    for l in range(L):
        maps = build_level(l, rational_enumeration(l + 1), **kwargs)
        m2 = m1 + maps.n
        gap = identity_gap(l, m2, maps.eps)
        if cap is not None:
            gap = min(gap, cap)
        m3 = m2 + gap
        m4 = m3 + maps.n
        levels.append(LevelRecord(l, maps, m1, m2, m3, m4))
        if debug:
            print(f"level {l}: r = {maps.r}, n = {maps.n}, eps = {maps.eps}")
            print(f"    m = ({m1}, {m2}, {m3}, {m4}), gap has {len(str(gap))} digits")
        m1 = m4

    schedule = Schedule(tuple(levels), truncated=cap is not None, cap=cap)
    check_schedule(schedule)
    return schedule


def schedule_violations(schedule):
    '''
    List every constraint the schedule violates, as human readable strings.
    An empty list means the schedule is valid.

    Checked for every level: the enumeration rational, the tiling of the
    blocks, `m2 - m1 = m4 - m3 = n_l`, the escape inclusions at `n_l` and their
    failure at `n_l - 1`, and the margin `eps_l`. For a true schedule also
    `m3 - m2 > 2l/eps_l` and `m2/m3 <= 1/(l+1)`; for a truncated one the gap
    is bounded by the cap.
    '''
    problems = []
    if len(schedule) == 0:
        return ["schedule has no levels"]
    if schedule.levels[0].m1 != 1:
        problems.append(f"m_1 must be 1, found {schedule.levels[0].m1}")
    previous_end = None
    for index, rec in enumerate(schedule.levels):
        l, maps = rec.l, rec.maps
        if l != index:
            problems.append(f"level {index} is labelled {l}")
        if maps.r != rational_enumeration(l + 1):
            problems.append(f"level {l}: r = {maps.r} is not the enumeration value")
        if previous_end is not None and rec.m1 != previous_end:
            problems.append(f"level {l}: starts at {rec.m1}, previous level ends at {previous_end}")
        previous_end = rec.m4
        if not rec.m1 < rec.m2 < rec.m3 < rec.m4:
            problems.append(f"level {l}: blocks are not increasing")
        if maps.n is None or rec.m2 - rec.m1 != maps.n or rec.m4 - rec.m3 != maps.n:
            problems.append(f"level {l}: H and HINV blocks must have length n_l = {maps.n}")
            continue
        if not escape_holds(maps, maps.n):
            problems.append(f"level {l}: escape inclusions fail at n_l = {maps.n}")
        if maps.n > 1 and escape_holds(maps, maps.n - 1):
            problems.append(f"level {l}: n_l = {maps.n} is not minimal")
        if maps.eps != compute_eps_l(maps, l):
            problems.append(f"level {l}: eps_l = {maps.eps} does not match its definition")
        if schedule.truncated:
            if schedule.cap is not None and rec.gap > schedule.cap:
                problems.append(f"level {l}: gap {rec.gap} exceeds cap {schedule.cap}")
            continue
        if l >= 1 and not rec.gap > 2 * l / maps.eps:
            problems.append(f"level {l}: gap {rec.gap} is not above 2l/eps_l")
        if Fraction(rec.m2, rec.m3) > Fraction(1, l + 1):
            problems.append(f"level {l}: m2/m3 exceeds 1/(l+1)")
    return problems


def check_schedule(schedule):
    '''Raise ConstraintError listing every violated constraint'''
    problems = schedule_violations(schedule)
    if problems:
        raise ConstraintError("Schedule violates its constraints:\n    "
                              + "\n    ".join(problems))
    return True


def resolve_g(schedule, k):
    '''
    The block containing cylinder index `k` and the map g_k acting there.

    Parameters
    ----------
    schedule : Schedule
    k : int
        `1 <= k < schedule.horizon`

    Returns
    -------
    block : BlockDescriptor
    g : PLMap
        h_l on H blocks, the identity on ID blocks, the inverse of h_l on
        HINV blocks

    Raises
    ------
    HorizonError
        k outside the built schedule
    '''
    rec = schedule.level_of(k)
    block = rec.block_of(k)
    if block.phase == "H":
        return block, rec.maps.h
    if block.phase == "ID":
        return block, IDENTITY
    return block, rec.maps.h_inv


def rotation_divisor(l):
    '''Psi(k, z) = z / rotation_divisor(l) on level l'''
    return 1 if l == 0 else l


def resolve_psi(schedule, k, z):
    '''
    Rotation angle Psi(k, z): `z` on level 0, `z/l` on level `l >= 1`

    Raises
    ------
    HorizonError
        k outside the built schedule
    ArgumentError
        z outside [0, 1]
    '''
    z = validate_keyword_unit(z, "z")
    rec = schedule.level_of(k)
    return z / rotation_divisor(rec.l)


def distr_trend(schedule):
    '''
    Finite-horizon evidence for the ratio limits of the block sequence:
    `m1/m2 -> 1` and `m2/m3 -> 0` along the levels.

    Returns
    -------
    trend : dict
        levels : list of dict
            per level `m1/m2`, `m2/m3` and `m3/m4` as exact Fractions
        m2_over_m3_bounded : bool
            `m2/m3 <= 1/(l+1)` for every level
        m1_over_m2_nondecreasing : bool
            `m1/m2` does not decrease from level 2 on
    '''
    rows = []
    for rec in schedule.levels:
        rows.append({"l": rec.l,
                     "m1_over_m2": Fraction(rec.m1, rec.m2),
                     "m2_over_m3": Fraction(rec.m2, rec.m3),
                     "m3_over_m4": Fraction(rec.m3, rec.m4)})
    bounded = all(row["m2_over_m3"] <= Fraction(1, row["l"] + 1) for row in rows)
    tail = [row["m1_over_m2"] for row in rows[2:]]
    nondecreasing = all(a <= b for a, b in zip(tail[:-1], tail[1:]))
    return {"levels": rows, "m2_over_m3_bounded": bounded,
            "m1_over_m2_nondecreasing": nondecreasing}


def require_true_schedule(schedule, purpose="certificates"):
    '''Refuse truncated schedules for statements about the true system'''
    if schedule.truncated:
        raise CertificateError(f"{purpose} require the true schedule; this one"\
                               f" is truncated at cap = {schedule.cap}")


def level_record(schedule, l):
    '''LevelRecord of level `l`, or HorizonError if it was not built'''
    l = validate_keyword_big_int(l, "l", minimum=0)
    if l >= len(schedule):
        raise HorizonError(f"Level {l} was not built; the schedule has"\
                           f" {len(schedule)} levels")
    return schedule.levels[l]
