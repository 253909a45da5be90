"""
Case analysis of pairs of the cylinder system X, with exact certificates
"""

from dataclasses import dataclass
from fractions import Fraction
import math
from typing import Optional

import chaoslab.defaults as default
from chaoslab.analysis.distributionProfile import angle_phi
from chaoslab.analysis.orbitRuns import advance
from chaoslab.construction.schedule import level_record, require_true_schedule, rotation_divisor
from chaoslab.dynamics.distance import dist_X
from chaoslab.dynamics.points import CylinderPoint, is_limit
from chaoslab.dynamics.stepMaps import step_F
from chaoslab.errors import ArgumentError
from chaoslab.general.arcHitCount import arc_hit_count
from chaoslab.general.lemmaBound import in_rigorous_regime, turn_bound
from chaoslab.general.validateKeyword import (validate_keyword_big_int,
                                              validate_keyword_delta,
                                              validate_keyword_delta_grid)

#: Tags of the case split. LIMIT: both points on the limit cylinder.
#: UNCOVERED: distinct finite cylinders at equal heights
CASES = ("A", "B", "C", "D", "LIMIT", "UNCOVERED")


@dataclass(frozen=True)
class CaseTag:
    '''
    Which case of the analysis a pair of X falls into.

    Attributes
    ----------
    case : str
        One of `CASES`
    k : int or None
        Shared cylinder index (A, B), inner cylinder index (D)
    L : int or None
        Smallest integer with `|z_u - z_v| > 1/L` (B, C; for D that of the
        substitute pair)
    offset : int or None
        `|k_u - k_v|` (C)
    substitute : CylinderPoint or None
        The point `w` replacing the limit point (D)
    substitute_case : str or None
        Case of the pair (inner point, w) (D)
    note : str
    '''
    case: str
    k: Optional[int] = None
    L: Optional[int] = None
    offset: Optional[int] = None
    substitute: Optional[CylinderPoint] = None
    substitute_case: Optional[str] = None
    note: str = ""

    def to_dict(self):
        return {"case": self.case, "k": self.k, "L": self.L, "offset": self.offset,
                "substitute": self.substitute, "substitute_case": self.substitute_case,
                "note": self.note}


def height_witness_level(z_u, z_v):
    '''Smallest integer `L >= 1` with `|z_u - z_v| > 1/L`'''
    gap = abs(z_u - z_v)
    if gap == 0:
        raise ArgumentError("Equal heights have no witness level")
    return math.floor(1 / gap) + 1


def _check_points(u, v):
    if not (isinstance(u, CylinderPoint) and isinstance(v, CylinderPoint)):
        raise ArgumentError("The case analysis applies to pairs of CylinderPoints")
    if u == v:
        raise ArgumentError("The two points must differ")


def extension_case_classify(u, v):
    '''
    Place a pair of distinct points of X in the case split.

    * A: same finite cylinder, same height. F rotates both by the same angle
      and is an isometry on the pair.
    * B: same finite cylinder, different heights.
    * C: different finite cylinders, different heights.
    * D: exactly one point on the limit cylinder. The limit point is replaced
      by `w = (k_inner, phi_limit, 0)`, which does not rotate, so both pairs
      have the same angular distances.
    * LIMIT: both points on the limit cylinder, where F is the identity.
    * UNCOVERED: different finite cylinders at equal heights. Not part of the
      case split; such pairs are only analysed through their profiles.

    Raises
    ------
    ArgumentError
        u == v, or points of the wrong type
    '''
    _check_points(u, v)
    if is_limit(u.cyl) and is_limit(v.cyl):
        return CaseTag("LIMIT", note="both points are fixed; the distance is constant")
    if is_limit(u.cyl) or is_limit(v.cyl):
        inner, fixed = (v, u) if is_limit(u.cyl) else (u, v)
        w = CylinderPoint(inner.cyl, fixed.phi, 0)
        if w == inner:
            return CaseTag("D", k=inner.cyl, substitute=w,
                           note="the inner point coincides with w; its distance to the"\
                                " limit point is 1/(k+t) and tends to 0")
        sub = extension_case_classify(inner, w)
        return CaseTag("D", k=inner.cyl, L=sub.L, substitute=w, substitute_case=sub.case)
    if u.cyl == v.cyl:
        if u.z == v.z:
            return CaseTag("A", k=u.cyl)
        return CaseTag("B", k=u.cyl, L=height_witness_level(u.z, v.z))
    if u.z != v.z:
        return CaseTag("C", L=height_witness_level(u.z, v.z), offset=abs(u.cyl - v.cyl))
    return CaseTag("UNCOVERED", offset=abs(u.cyl - v.cyl),
                   note="different cylinders at equal heights")


def extension_phistar_bound(schedule, u, v, delta, l):
    '''
    Exact angular hit count of a case B or C pair over the identity block of
    level `l`, compared with the `3*delta` estimate of the rotation lemma.

    Both points are advanced, in closed form, to the entry of the identity
    block. There their heights are frozen and their angles turn by `z/l` per
    step, so the relative rotation `dpsi = |z'_u - z'_v|/l` is constant and
    the count over the open block `m2 < i < m3` is an `arc_hit_count` with
    `p = m3 - m2`. For a case C pair with cylinder offset `o`, only the
    `p - o` times at which both points are inside their identity blocks are
    counted, and the estimate gains the correction `2*o/p`.

    Since the max-metric dominates its angular term, the fraction bounds the
    distribution function on the block from above. The report also gives a
    whole-window upper bound of the distribution function at horizon
    `m3 - k`, counting every time outside the counted block as a hit.

    Parameters
    ----------
    schedule : Schedule
        True (not truncated) schedule
    u, v : CylinderPoint
        Case B or C pair
    delta : Fraction
    l : int
        Level, at least the height witness level L of the pair

    Returns
    -------
    report : dict
        case, l, p, offset, heights (at block entry), dpsi, count, fraction,
        bound (`3*delta`), correction, corrected_bound, block_fraction_bound,
        holds (`fraction < 3*delta`), lemma_applicable (`p > 2/dpsi`),
        rigorous_regime, turn_bound, vacuous (`3*delta >= 1`),
        window_horizon, window_upper

    Raises
    ------
    ArgumentError
        Not a case B/C pair, level below L, or the pair starts too late for
        the block
    CertificateError
        Truncated schedule
    '''
    require_true_schedule(schedule)
    delta = validate_keyword_delta(delta)
    tag = extension_case_classify(u, v)
    if tag.case not in ("B", "C"):
        raise ArgumentError(f"extension_phistar_bound applies to case B and C pairs,"\
                            f" not case {tag.case}")
    l = validate_keyword_big_int(l, "l", minimum=1)
    if l < tag.L:
        raise ArgumentError(f"Level {l} is below the height witness level L = {tag.L}")
    rec = level_record(schedule, l)
    p = rec.gap
    lag, lead = (u, v) if u.cyl <= v.cyl else (v, u)
    offset = lead.cyl - lag.cyl
    if lag.cyl > rec.m2:
        raise ArgumentError(f"The pair starts on cylinder {lag.cyl}, after the"\
                            f" identity block of level {l} begins ({rec.m2})")
    if offset >= p:
        raise ArgumentError(f"Cylinder offset {offset} is not below the block length {p}")

    # state of both points when the lagging one enters the block
    t_entry = rec.m2 - lag.cyl
    lag_entry = advance(schedule, lag, t_entry)
    lead_entry = advance(schedule, lead, t_entry)
    divisor = rotation_divisor(l)
    rotation = (lead_entry.z - lag_entry.z) / divisor
    dpsi = abs(rotation)
    counted = p - offset
    count = arc_hit_count(counted, lag_entry.phi, lead_entry.phi, rotation, delta)

    fraction = Fraction(count, p)
    bound = 3 * delta
    correction = Fraction(2 * offset, p)
    window = rec.m3 - lag.cyl
    report = {
        "case": tag.case,
        "l": l,
        "p": p,
        "offset": offset,
        "heights": (lag_entry.z, lead_entry.z),
        "dpsi": dpsi,
        "count": count,
        "fraction": fraction,
        "bound": bound,
        "correction": correction,
        "corrected_bound": bound + correction,
        "block_fraction_bound": Fraction(count + offset, p),
        "holds": fraction < bound,
        "lemma_applicable": dpsi > 0 and counted > 2 / dpsi,
        "rigorous_regime": in_rigorous_regime(counted, dpsi, delta),
        "turn_bound": turn_bound(counted, dpsi, delta),
        "vacuous": bound >= 1,
        "window_horizon": window,
        "window_upper": Fraction(count + window - p + offset, window),
    }
    return report


def isometry_certificate(schedule, u, v, steps=None):
    '''
    Step a case A pair and confirm that every step preserves the distance.

    Returns
    -------
    certificate : dict
        case, steps, distance, holds
    '''
    tag = extension_case_classify(u, v)
    if tag.case != "A":
        raise ArgumentError(f"isometry_certificate applies to case A pairs, not case {tag.case}")
    steps = validate_keyword_big_int(default.isometry_steps if steps is None else steps,
                                     "steps", minimum=0)
    d0 = dist_X(u, v)
    holds = True
    for _ in range(steps):
        u, v = step_F(schedule, u), step_F(schedule, v)
        if dist_X(u, v) != d0:
            holds = False
            break
    return {"case": "A", "steps": steps, "distance": d0, "holds": holds}


def substitution_certificate(schedule, u, v, m=None, deltas=None, **kwargs):
    '''
    Replace the limit point of a case D pair by `w` and check that the
    angular statistics do not change.

    The angular profiles of (inner, limit point) and (inner, w) are computed
    in closed form up to horizon `m` and compared exactly at every delta. If
    the substitute pair is of case B, `extension_phistar_bound` is applied to
    it at the requested levels.

    Other Parameters
    ----------------
    levels : iterable of int, optional
        Levels for the case B bounds. Default `chaoslab.defaults.certificate_levels`
    certificate_delta : Fraction, optional

    Returns
    -------
    certificate : dict
        substitute, substitute_case, horizon, counts (per delta, both
        pairs), equal, bounds
    '''
    tag = extension_case_classify(u, v)
    if tag.case != "D":
        raise ArgumentError(f"substitution_certificate applies to case D pairs, not case {tag.case}")
    deltas = validate_keyword_delta_grid(deltas)
    inner, fixed = (v, u) if is_limit(u.cyl) else (u, v)
    w = tag.substitute
    if m is None:
        m = schedule.horizon - inner.cyl
    original = angle_phi(schedule, inner, fixed, m, deltas)
    substituted = angle_phi(schedule, inner, w, m, deltas)
    counts = [{"delta": a.delta, "original": a.count, "substitute": b.count}
              for a, b in zip(original, substituted)]
    bounds = []
    if tag.substitute_case == "B" and not schedule.truncated:
        delta = kwargs.get("certificate_delta", default.certificate_delta)
        for l in kwargs.get("levels", default.certificate_levels):
            if tag.L <= l < len(schedule) and inner.cyl <= schedule.levels[l].m2:
                bounds.append(extension_phistar_bound(schedule, inner, w, delta, l))
    return {"substitute": w, "substitute_case": tag.substitute_case, "horizon": m,
            "counts": counts, "equal": all(c["original"] == c["substitute"] for c in counts),
            "bounds": bounds}
