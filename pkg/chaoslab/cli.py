"""
Command line interface: build schedules, check the rotation lemma, simulate
orbits, classify pairs and emit certificates.

Exit codes: 0 success, 2 usage error, 3 constraint or certificate failure,
4 horizon error.
"""

import argparse
import csv
import io
from fractions import Fraction
import json
import math
import sys

import chaoslab.defaults as default
from chaoslab.analysis import (block_exact_phi, classify_pair_DC, examined_horizons,
                               extension_case_classify, extension_phistar_bound,
                               find_dc1_witness_blocks, isometry_certificate,
                               substitution_certificate, witness_windows)
from chaoslab.construction import build_schedule, load_schedule, save_schedule
from chaoslab.construction.schedule import require_true_schedule
from chaoslab.construction.scheduleFile import schedule_fingerprint, schedule_to_dict
from chaoslab.dynamics import (LIMIT, CylinderPoint, FiberPoint, distance, is_limit,
                               orbit, point_from_literal)
from chaoslab.errors import (ArgumentError, CertificateError, ConstraintError,
                             HorizonError)
from chaoslab.general import (RationalSampler, approx_decimal, canonical_json,
                              lemma1_bound_check, parallel_map, rational_to_str,
                              to_jsonable, validate_keyword_rational)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAILURE = 3
EXIT_HORIZON = 4


###############################################################################
################                ARGUMENT TYPES
###############################################################################
def _rational(text):
    try:
        return validate_keyword_rational(text, "value")
    except ArgumentError as err:
        raise argparse.ArgumentTypeError(str(err))


def _cap(text):
    if text.strip().lower() == "none":
        return None
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cap must be an integer or 'none', not '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError("cap must be at least 1")
    return value


def _point(text):
    try:
        return point_from_literal(text)
    except ArgumentError as err:
        raise argparse.ArgumentTypeError(str(err))


def build_parser():
    parser = argparse.ArgumentParser(prog="chaoslab", description="Exact simulation and"\
                                     " analysis of the cylinder system and its factor")
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    def schedule_options(sub):
        sub.add_argument("--schedule", default=None, help="Schedule file (JSON). If"\
                         " omitted, a schedule is built from --levels and --cap")
        sub.add_argument("--levels", type=int, default=default.levels,
                         help=f"Number of levels to build (default {default.levels})")
        sub.add_argument("--cap", type=_cap, default=default.cap,
                         help="Cap on identity block lengths, or 'none' (default)")

    def output_options(sub, formats=default.formats, fmt="json"):
        sub.add_argument("--out", default=None, help="Output file (default stdout)")
        sub.add_argument("--format", choices=formats, default=fmt)

    sub = commands.add_parser("schedule", help="Build and save a schedule")
    sub.add_argument("--levels", type=int, default=default.levels)
    sub.add_argument("--cap", type=_cap, default=default.cap)
    output_options(sub, formats=("json",))
    sub.set_defaults(func=cmd_schedule_build)

    sub = commands.add_parser("lemma1", help="Check the rotation lemma on random parameters")
    sub.add_argument("--samples", type=int, default=default.lemma_samples)
    sub.add_argument("--seed", type=int, default=default.seed)
    sub.add_argument("--max-p", type=int, default=default.lemma_max_p, dest="max_p")
    output_options(sub)
    sub.set_defaults(func=cmd_lemma1)

    sub = commands.add_parser("simulate", help="Trace the orbit of one point or a pair")
    schedule_options(sub)
    sub.add_argument("--point", type=_point, action="append", required=True,
                     help='Point literal, e.g. \'{"k": "1", "phi": "1/3", "z": "2/5"}\'.'\
                     ' Give it twice for a pair')
    sub.add_argument("--steps", type=int, default=100)
    sub.add_argument("--stride", type=int, default=1)
    output_options(sub, fmt="csv")
    sub.set_defaults(func=cmd_simulate)

    sub = commands.add_parser("classify", help="Distributional chaos verdict for a pair")
    schedule_options(sub)
    sub.add_argument("--u", type=_point, required=True)
    sub.add_argument("--v", type=_point, required=True)
    sub.add_argument("--delta", type=_rational, action="append", default=None,
                     help="Threshold 'p/q'; repeat for a grid")
    sub.add_argument("--profile-mode", choices=default.profile_modes,
                     default=default.profile_mode, dest="profile_mode")
    sub.add_argument("--tolerance", type=_rational, default=default.dc_tolerance)
    sub.add_argument("--burn-in", type=int, default=default.burn_in_level, dest="burn_in")
    output_options(sub)
    sub.set_defaults(func=cmd_classify)

    sub = commands.add_parser("certify", help="Certificate bundle for sampled pairs")
    schedule_options(sub)
    sub.add_argument("--mode", choices=("factor-dc1", "extension-nodc"), required=True)
    sub.add_argument("--samples", type=int, default=default.certificate_samples)
    sub.add_argument("--seed", type=int, default=default.seed)
    sub.add_argument("--delta", type=_rational, action="append", default=None)
    output_options(sub, formats=("json",))
    sub.set_defaults(func=cmd_certify)
    return parser


###############################################################################
################                OUTPUT
###############################################################################
def run_config(args):
    '''The configuration echoed by every report. The output path is left out'''
    return {key: value for key, value in sorted(vars(args).items())
            if key not in ("func", "out")}


def _cell(value):
    if isinstance(value, bool) or value is None:
        return str(value).lower()
    if isinstance(value, Fraction):
        return approx_decimal(value)
    return str(value)


def _emit(args, text):
    if args.out is None:
        sys.stdout.write(text)
        return
    with open(args.out, "w", newline="") as f:
        f.write(text)


def write_report(args, document, header=None, rows=None):
    '''
    JSON: the canonical dump of `document`. CSV: comment lines with schema,
    fingerprint and configuration, then `header` and `rows` with decimal
    approximations.
    '''
    if args.format == "json" or rows is None:
        _emit(args, canonical_json(document))
        return
    buffer = io.StringIO()
    buffer.write("# approximate decimal values\n")
    buffer.write(f"# schema: {document['schema']}\n")
    if "fingerprint" in document:
        buffer.write(f"# fingerprint: {document['fingerprint']}\n")
    config = json.dumps(to_jsonable(document["config"]), sort_keys=True, separators=(",", ":"))
    buffer.write(f"# config: {config}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(value) for value in row])
    _emit(args, buffer.getvalue())


def _summary(args, *lines):
    if args.out is not None:
        for line in lines:
            print(line)


def _document(args, schedule=None, **content):
    document = {"schema": default.schema_version, "config": run_config(args)}
    if schedule is not None:
        document["fingerprint"] = schedule_fingerprint(schedule)
    document.update(content)
    return document


def _load(args):
    if args.schedule is not None:
        return load_schedule(args.schedule)
    return build_schedule(args.levels, cap=args.cap)


###############################################################################
################                COMMANDS
###############################################################################
def cmd_schedule_build(args):
    schedule = build_schedule(args.levels, cap=args.cap)
    if args.out is None:
        document = schedule_to_dict(schedule)
        document["schema"] = default.schema_version
        document["fingerprint"] = schedule_fingerprint(schedule)
        document["config"] = to_jsonable(run_config(args))
        sys.stdout.write(canonical_json(document))
        return EXIT_OK
    fingerprint = save_schedule(schedule, args.out, config=run_config(args))
    _summary(args, f"schedule with {len(schedule)} levels written to {args.out} ({fingerprint})")
    for rec in schedule.levels:
        _summary(args, f"  level {rec.l}: r = {rational_to_str(rec.maps.r)}, n = {rec.maps.n},"\
                 f" eps ~ {approx_decimal(rec.maps.eps, 4)}, m4 has {len(str(rec.m4))} digits")
    return EXIT_OK


def draw_lemma_parameters(sampler, max_p=None, max_denominator=None):
    '''
    Random parameters of the rotation lemma inside the regime where its
    estimate is guaranteed: `delta <= 1/4`, relative rotation at most
    `delta/4` and `p * rotation >= 8` (which also gives `p > 2/rotation`).
    '''
    max_p = default.lemma_max_p if max_p is None else max_p
    q = default.max_denominator if max_denominator is None else max_denominator
    delta = sampler.rational(Fraction(1, q), Fraction(1, 4), q, closed=True)
    rotation = delta * Fraction(sampler.integer(1, 250), 1000)
    r_u = sampler.rational(0, 1 - rotation, q)
    r_v = r_u + rotation
    if sampler.below(2):
        r_u, r_v = r_v, r_u
    theta_u = sampler.rational(0, 1, q)
    theta_v = sampler.rational(0, 1, q)
    p_min = max(math.ceil(8 / rotation), math.floor(2 / rotation) + 1)
    p = sampler.log_integer(p_min, max(p_min, max_p))
    return {"theta_u": theta_u, "theta_v": theta_v, "r_u": r_u, "r_v": r_v,
            "delta": delta, "p": p}


def _lemma_row(params):
    report = lemma1_bound_check(**params)
    return {**params, **report}


def cmd_lemma1(args):
    if args.samples < 1:
        raise ArgumentError(f"--samples must be at least 1. You provided {args.samples}")
    sampler = RationalSampler(args.seed)
    params = [draw_lemma_parameters(sampler, args.max_p) for _ in range(args.samples)]
    results = parallel_map(_lemma_row, params)
    violations = [i for i, row in enumerate(results) if not row["holds"]]
    ratios = [row["fraction"] / row["bound"] for row in results]
    worst = max(range(len(results)), key=lambda i: ratios[i])
    summary = {"samples": len(results), "violations": len(violations),
               "violating_samples": violations, "worst_ratio": ratios[worst],
               "worst_sample": worst, "largest_p": max(row["p"] for row in results)}
    document = _document(args, summary=summary, samples=results)
    header = ["theta_u", "theta_v", "r_u", "r_v", "delta", "p", "count", "fraction",
              "bound", "holds", "turn_bound", "rigorous_regime"]
    write_report(args, document, header, [[row[key] for key in header] for row in results])
    _summary(args, f"{len(results)} samples, {len(violations)} violations,"\
             f" worst fraction/(3 delta) ~ {approx_decimal(ratios[worst], 4)}")
    return EXIT_FAILURE if violations else EXIT_OK


def cmd_simulate(args):
    points = args.point
    if len(points) not in (1, 2):
        raise ArgumentError("--point must be given once or twice")
    if len(points) == 2 and type(points[0]) is not type(points[1]):
        raise ArgumentError("Both points must belong to the same space")
    if args.steps < 1 or args.stride < 1:
        raise ArgumentError("--steps and --stride must be at least 1")
    schedule = _load(args)

    traces = []
    for point in points:
        trace = []
        orbit(schedule, point, args.steps - 1,
              lambda i, p: trace.append(p) if i % args.stride == 0 else None)
        traces.append(trace)

    header = ["i"]
    for name in ("u", "v")[:len(points)]:
        header += [f"k_{name}", f"phi_{name}", f"z_{name}"] if isinstance(points[0], CylinderPoint)\
            else [f"k_{name}", f"z_{name}"]
    if len(points) == 2:
        header.append("distance")
    rows = []
    for index, states in enumerate(zip(*traces)):
        row = [index * args.stride]
        for p in states:
            row += [p.cyl, p.phi, p.z] if isinstance(p, CylinderPoint) else [p.cyl, p.z]
        if len(states) == 2:
            row.append(distance(*states))
        rows.append(row)
    document = _document(args, schedule, header=header, rows=rows,
                         truncated=schedule.truncated)
    write_report(args, document, header, rows)
    _summary(args, f"{len(rows)} rows written to {args.out}")
    return EXIT_OK


def cmd_classify(args):
    schedule = _load(args)
    kwargs = {"mode": args.profile_mode, "tolerance": args.tolerance, "burn_in": args.burn_in}
    if args.delta is not None:
        kwargs["delta_grid"] = args.delta
    verdict = classify_pair_DC(schedule, args.u, args.v, **kwargs)
    document = _document(args, schedule, verdict=verdict, truncated=schedule.truncated)
    header = ["delta", "phi_lower", "phistar_upper"]
    rows = [[d, verdict.phi_lower[d], verdict.phistar_upper[d]] for d in sorted(verdict.phi_lower)]
    write_report(args, document, header, rows)
    _summary(args, f"classification: {verdict.classification} over horizons up to"\
             f" {max(verdict.horizons)}")
    return EXIT_OK


def draw_fiber_pair(sampler):
    '''Heights on fiber 1 at least 1/5 apart'''
    z_u = sampler.rational(0, 1, default.max_denominator, closed=True)
    while True:
        z_v = sampler.rational(0, 1, default.max_denominator, closed=True)
        if abs(z_u - z_v) >= Fraction(1, 5):
            return z_u, z_v


def _factor_entry(job):
    schedule, z_u, z_v, deltas = job
    s_levels, q_levels = find_dc1_witness_blocks(schedule, z_u, z_v, default.witness_levels)
    u, v = FiberPoint(1, z_u), FiberPoint(1, z_v)
    profiles = []
    for m in examined_horizons(schedule, u, v):
        profiles.extend(block_exact_phi(schedule, u, v, m, deltas))
    return {"z_u": z_u, "z_v": z_v, "s_levels": s_levels, "q_levels": q_levels,
            "windows": witness_windows(schedule, s_levels, q_levels), "profiles": profiles}


def draw_extension_pair(sampler, case):
    '''A pair of X of the requested case, with heights far apart for B, C, D'''
    q = default.max_denominator
    phi_u, phi_v = sampler.rational(0, 1, q), sampler.rational(0, 1, q)
    high = sampler.rational(Fraction(3, 4), 1, q, closed=True)
    low = sampler.rational(0, Fraction(1, 8), q, closed=True)
    if case == "A":
        if phi_u == phi_v:
            phi_v = (phi_u + Fraction(1, 2)) % 1
        z = sampler.rational(0, 1, q, closed=True)
        return CylinderPoint(1, phi_u, z), CylinderPoint(1, phi_v, z)
    if case == "B":
        return CylinderPoint(1, phi_u, high), CylinderPoint(1, phi_v, low)
    if case == "C":
        return CylinderPoint(1, phi_u, high), CylinderPoint(1 + sampler.integer(1, 3), phi_v, low)
    return CylinderPoint(1, phi_u, high), CylinderPoint(LIMIT, phi_v, low)


def _extension_entry(job):
    schedule, u, v, deltas = job
    tag = extension_case_classify(u, v)
    entry = {"u": u, "v": v, "case": tag}
    if tag.case == "A":
        entry["isometry"] = isometry_certificate(schedule, u, v)
        entry["ok"] = entry["isometry"]["holds"]
    elif tag.case in ("B", "C"):
        bounds = []
        for l in default.certificate_levels:
            if tag.L <= l < len(schedule):
                bound = extension_phistar_bound(schedule, u, v, default.certificate_delta, l)
                bound["certified"] = bound["holds"]
                bounds.append(bound)
        entry["bounds"] = bounds
        entry["certified"] = all(b["certified"] for b in bounds)
        # a block count above 3*delta is only a contradiction inside the rigorous regime
        entry["ok"] = all(b["window_upper"] < 1 and (b["holds"] or not b["rigorous_regime"])
                          for b in bounds)
    else:
        inner = v if is_limit(u.cyl) else u
        m = schedule.horizon - inner.cyl
        entry["substitution"] = substitution_certificate(schedule, u, v, m, deltas)
        entry["ok"] = entry["substitution"]["equal"]
    return entry


def cmd_certify(args):
    schedule = _load(args)
    require_true_schedule(schedule)
    if args.samples < 1:
        raise ArgumentError(f"--samples must be at least 1. You provided {args.samples}")
    sampler = RationalSampler(args.seed)
    deltas = args.delta
    notes = []

    if args.mode == "factor-dc1":
        pairs = [(Fraction(1), Fraction(0))]
        pairs += [draw_fiber_pair(sampler) for _ in range(args.samples)]
        entries = parallel_map(_factor_entry, [(schedule, zu, zv, deltas) for zu, zv in pairs])
        endpoint_zero = all(p.count == 0 for p in entries[0]["profiles"])
        missing_q = [i for i, e in enumerate(entries) if not e["q_levels"]]
        summary = {"pairs": len(entries), "endpoint_phi_zero": endpoint_zero,
                   "pairs_without_q_witness": missing_q,
                   "pairs_with_s_witness": sum(1 for e in entries if e["s_levels"])}
        failed = not endpoint_zero or bool(missing_q)
    else:
        cases = ("A", "B", "C", "D")
        pairs = [draw_extension_pair(sampler, cases[i % 4]) for i in range(args.samples)]
        entries = parallel_map(_extension_entry, [(schedule, u, v, deltas) for u, v in pairs])
        failed_entries = [i for i, e in enumerate(entries) if not e["ok"]]
        uncertified = [{"pair": i, "case": e["case"].case, "l": b["l"], "dpsi": b["dpsi"],
                        "fraction": b["fraction"], "bound": b["bound"],
                        "rigorous_regime": b["rigorous_regime"]}
                       for i, e in enumerate(entries) for b in e.get("bounds", [])
                       if not b["certified"]]
        summary = {"pairs": len(entries), "failed": failed_entries,
                   "lemma_bound_holds": sum(1 for e in entries for b in e.get("bounds", [])
                                            if b["holds"]),
                   "lemma_bounds": sum(len(e.get("bounds", [])) for e in entries),
                   "uncertified": uncertified}
        failed = bool(failed_entries)
        notes.append(f"{len(uncertified)} of {summary['lemma_bounds']} block bounds uncertified")

    document = _document(args, schedule, summary=summary, entries=entries)
    write_report(args, document)
    status = "FAILED" if failed else "ok"
    _summary(args, ", ".join([f"{args.mode}: {len(entries)} pairs", status] + notes))
    return EXIT_FAILURE if failed else EXIT_OK


###############################################################################
################                ENTRY POINT
###############################################################################
def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ArgumentError as err:
        print(f"chaoslab: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (ConstraintError, CertificateError) as err:
        print(f"chaoslab: failed: {err}", file=sys.stderr)
        return EXIT_FAILURE
    except HorizonError as err:
        print(f"chaoslab: horizon: {err}", file=sys.stderr)
        return EXIT_HORIZON


if __name__ == "__main__":
    sys.exit(main())
