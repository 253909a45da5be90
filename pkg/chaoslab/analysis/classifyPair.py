"""
Finite-horizon distributional chaos verdicts for pairs of points
"""

from dataclasses import dataclass, field

import chaoslab.defaults as default
from chaoslab.analysis.distributionProfile import profile
from chaoslab.analysis.extensionCases import (extension_case_classify,
                                              extension_phistar_bound,
                                              isometry_certificate,
                                              substitution_certificate)
from chaoslab.analysis.factorBlocks import find_dc1_witness_blocks, witness_windows
from chaoslab.dynamics.points import CylinderPoint, FiberPoint, is_limit
from chaoslab.errors import ArgumentError, HorizonError
from chaoslab.general.validateKeyword import (validate_keyword_big_int,
                                              validate_keyword_delta,
                                              validate_keyword_delta_grid,
                                              validate_keyword_rational)

#: Verdicts, strongest first
CLASSIFICATIONS = ("DC1", "DC2", "DC3", "NONE")


@dataclass
class PairVerdict:
    '''
    Outcome of `classify_pair_DC`.

    `phi_lower[delta]` and `phistar_upper[delta]` are the smallest and the
    largest window fraction over the examined horizons, the finite-horizon
    stand-ins for the lower and the upper distribution function.
    '''
    classification: str
    phistar_one: bool
    phi_zero: bool
    dc3: bool
    li_yorke: dict
    horizons: list
    phi_lower: dict
    phistar_upper: dict
    tolerance: object
    mode: str
    case: object = None
    certificates: list = field(default_factory=list)

    def to_dict(self):
        return {"classification": self.classification, "phistar_one": self.phistar_one,
                "phi_zero": self.phi_zero, "dc3": self.dc3, "li_yorke": self.li_yorke,
                "horizons": self.horizons, "phi_lower": self.phi_lower,
                "phistar_upper": self.phistar_upper, "tolerance": self.tolerance,
                "mode": self.mode, "case": self.case, "certificates": self.certificates}


def examined_horizons(schedule, u, v, burn_in=None):
    '''
    Horizons at which the window fractions of a pair are evaluated: the
    entry `m2` and the exit `m3` of every identity block from the burn-in
    level on, measured in steps from the cylinder of the point that is
    furthest behind. Horizons the other point cannot reach inside the
    schedule are dropped.
    '''
    burn_in = default.burn_in_level if burn_in is None else burn_in
    finite = [p.cyl for p in (u, v) if not is_limit(p.cyl)]
    c_ref = min(finite) if finite else 1
    c_max = max(finite) if finite else 1
    horizons = set()
    for rec in schedule.levels[burn_in:]:
        for mark in (rec.m2, rec.m3):
            m = mark - c_ref
            if m >= 2 and c_max + m <= schedule.horizon:
                horizons.add(m)
    return sorted(horizons)


def classify_pair_DC(schedule, u, v, **kwargs):
    '''
    Classify a pair as distributionally scrambled of type 1, 2 or 3 at the
    horizons the schedule reaches.

    The lower and upper distribution functions are lim inf and lim sup of
    window fractions and cannot be computed. They are read at the examined
    horizons (identity block entries and exits), with a tolerance `tau`:

    * "upper function equal to one": the largest fraction is at least
      `1 - tau` at every delta of the grid
    * "lower function zero somewhere": the smallest fraction is at most `tau`
      at some delta
    * DC3 evidence: largest minus smallest fraction is at least `tau` at some
      delta

    DC1 needs the first two, DC2 the first and the third, DC3 the third. The
    verdict is always a statement about the examined horizons only.

    Parameters
    ----------
    schedule : Schedule
    u, v : CylinderPoint or FiberPoint

    Other Parameters
    ----------------
    delta_grid : iterable of Fraction, optional
    tolerance : Fraction, optional
        Default `chaoslab.defaults.dc_tolerance`
    burn_in : int, optional
        First level whose blocks give horizons. Default
        `chaoslab.defaults.burn_in_level`
    mode : str, optional
        "block_exact" (default) or "empirical"
    horizons : list of int, optional
        Override the examined horizons
    certify : bool, optional
        Attach certificates. Default True

    Returns
    -------
    verdict : PairVerdict

    Raises
    ------
    ArgumentError
        u == v, or points of different kinds
    HorizonError
        No horizon can be examined
    '''
    if type(u) is not type(v) or not isinstance(u, (CylinderPoint, FiberPoint)):
        raise ArgumentError("classify_pair_DC needs two points of the same space")
    if u == v:
        raise ArgumentError("The two points must differ")
    deltas = validate_keyword_delta_grid(kwargs.get("delta_grid", None))
    tolerance = validate_keyword_rational(kwargs.get("tolerance", default.dc_tolerance),
                                          "tolerance")
    if not 0 < tolerance < 1:
        raise ArgumentError(f"Keyword 'tolerance' must lie in (0, 1). You provided {tolerance}")
    burn_in = validate_keyword_big_int(kwargs.get("burn_in", default.burn_in_level),
                                       "burn_in", minimum=0)
    mode = kwargs.get("mode", default.profile_mode)
    horizons = kwargs.get("horizons", None)
    if horizons is None:
        horizons = examined_horizons(schedule, u, v, burn_in)
    horizons = sorted({validate_keyword_big_int(m, "horizon", minimum=1) for m in horizons})
    if not horizons:
        raise HorizonError("No horizon can be examined. Build more levels, or"\
                           " lower the burn-in level")

    table = {}
    for m in horizons:
        for prof in profile(schedule, u, v, m, deltas, mode=mode):
            table[(prof.delta, m)] = prof
    phi_lower = {d: min(table[(d, m)].fraction for m in horizons) for d in deltas}
    phistar_upper = {d: max(table[(d, m)].fraction for m in horizons) for d in deltas}

    phistar_one = all(phistar_upper[d] >= 1 - tolerance for d in deltas)
    phi_zero = any(phi_lower[d] <= tolerance for d in deltas)
    dc3 = any(phistar_upper[d] - phi_lower[d] >= tolerance for d in deltas)
    if phistar_one and phi_zero:
        classification = "DC1"
    elif phistar_one and dc3:
        classification = "DC2"
    elif dc3:
        classification = "DC3"
    else:
        classification = "NONE"

    smallest, largest = deltas[0], deltas[-1]
    li_yorke = {
        "proximal": any(table[(smallest, m)].count > 0 for m in horizons),
        "separated": any(table[(largest, m)].count < m - 1 for m in horizons),
    }

    verdict = PairVerdict(classification, phistar_one, phi_zero, dc3, li_yorke,
                          horizons, phi_lower, phistar_upper, tolerance, mode)
    if kwargs.get("certify", True):
        _attach_certificates(verdict, schedule, u, v, table, deltas, horizons, **kwargs)
    return verdict


def _attach_certificates(verdict, schedule, u, v, table, deltas, horizons, **kwargs):
    certificates = verdict.certificates
    for d in deltas:
        if verdict.phi_lower[d] <= verdict.tolerance:
            m = min(horizons, key=lambda h: table[(d, h)].fraction)
            certificates.append({"kind": "phi_zero", "delta": d, "horizon": m,
                                 "fraction": table[(d, m)].fraction})
    if verdict.phistar_one:
        for d in deltas:
            m = max(horizons, key=lambda h: table[(d, h)].fraction)
            certificates.append({"kind": "phistar_one", "delta": d, "horizon": m,
                                 "fraction": table[(d, m)].fraction})

    if isinstance(u, FiberPoint):
        if u.cyl == v.cyl == 1:
            s_levels, q_levels = find_dc1_witness_blocks(schedule, u.z, v.z,
                                                         default.witness_levels)
            certificates.append({"kind": "factor_witness", "s_levels": s_levels,
                                 "q_levels": q_levels,
                                 "windows": witness_windows(schedule, s_levels, q_levels)})
        return

    tag = extension_case_classify(u, v)
    verdict.case = tag
    if schedule.truncated:
        certificates.append({"kind": "refused", "reason": "truncated schedule"})
        return
    delta = validate_keyword_delta(kwargs.get("certificate_delta", default.certificate_delta),
                                   "certificate_delta")
    levels = kwargs.get("levels", default.certificate_levels)
    if tag.case == "A":
        finite_steps = schedule.horizon - u.cyl
        steps = min(kwargs.get("isometry_steps", default.isometry_steps), finite_steps)
        certificates.append({"kind": "isometry", **isometry_certificate(schedule, u, v, steps)})
    elif tag.case in ("B", "C"):
        lag = min(u.cyl, v.cyl)
        for l in levels:
            if not tag.L <= l < len(schedule):
                continue
            rec = schedule.levels[l]
            if lag > rec.m2 or tag.offset is not None and tag.offset >= rec.gap:
                continue
            certificates.append({"kind": "lemma_bound",
                                 **extension_phistar_bound(schedule, u, v, delta, l)})
    elif tag.case == "D":
        certificates.append({"kind": "substitution",
                             **substitution_certificate(schedule, u, v, max(horizons), deltas,
                                                        certificate_delta=delta,
                                                        levels=levels)})
