"""Read and write schedule files"""

import json

import chaoslab.defaults as default
from chaoslab.construction.levelMaps import build_level
from chaoslab.construction.schedule import LevelRecord, Schedule, check_schedule
from chaoslab.errors import ArgumentError, ConstraintError
from chaoslab.general.serialize import canonical_json, fingerprint, to_jsonable
from chaoslab.general.validateKeyword import validate_keyword_big_int, validate_keyword_rational


def schedule_to_dict(schedule):
    '''
    JSON-ready form of a schedule: rationals as "p/q" strings, integers as
    decimal strings.

        {"levels": [{"l": "0", "r": "1/2", "alpha": "1/8", "n": "1",
                     "eps": "1", "m": ["1", "2", "5", "6"]}, ...],
         "truncated": false, "cap": null}
    '''
    return to_jsonable(schedule.to_dict())


def schedule_fingerprint(schedule):
    '''sha256 over the canonical JSON form of the schedule'''
    return fingerprint(schedule_to_dict(schedule))


def schedule_from_dict(data, **kwargs):
    '''
    Rebuild a schedule from its dictionary form.

    The maps of every level are reconstructed from `r`, and `alpha`, `n` and
    `eps` are compared with the stored values. The whole schedule is then
    verified exactly as a freshly built one.

    Raises
    ------
    ConstraintError
        The data does not describe a valid schedule
    '''
    try:
        rows = data["levels"]
        truncated = bool(data.get("truncated", False))
        cap = data.get("cap", None)
        if cap is not None:
            cap = validate_keyword_big_int(cap, "cap", minimum=1)
        levels = []
        for row in rows:
            l = validate_keyword_big_int(row["l"], "l", minimum=0)
            maps = build_level(l, validate_keyword_rational(row["r"], "r"), **kwargs)
            stored = {"alpha": validate_keyword_rational(row["alpha"], "alpha"),
                      "n": validate_keyword_big_int(row["n"], "n"),
                      "eps": validate_keyword_rational(row["eps"], "eps")}
            for key, value in stored.items():
                if getattr(maps, key) != value:
                    raise ConstraintError(f"level {l}: stored {key} = {value} differs"\
                                          f" from the recomputed {getattr(maps, key)}")
            m1, m2, m3, m4 = (validate_keyword_big_int(m, "m") for m in row["m"])
            levels.append(LevelRecord(l, maps, m1, m2, m3, m4))
    except (KeyError, TypeError, ValueError, ArgumentError) as err:
        raise ConstraintError(f"Not a schedule file: {err}")
    if not levels:
        raise ConstraintError("Not a schedule file: no levels")
    if truncated and cap is None:
        raise ConstraintError("A truncated schedule must record its cap")
    schedule = Schedule(tuple(levels), truncated=truncated, cap=cap if truncated else None)
    check_schedule(schedule)
    return schedule


def save_schedule(schedule, path, **kwargs):
    '''
    Write a schedule file. The file holds the schedule, the schema version,
    the fingerprint of the schedule and, optionally, the configuration that
    produced it (keyword `config`). The output is byte-identical for equal
    schedules and configurations.
    '''
    document = schedule_to_dict(schedule)
    document["schema"] = default.schema_version
    document["fingerprint"] = schedule_fingerprint(schedule)
    config = kwargs.get("config", None)
    if config is not None:
        document["config"] = to_jsonable(config)
    with open(path, "w", newline="\n") as f:
        f.write(canonical_json(document))
    return document["fingerprint"]


def load_schedule(path, **kwargs):
    '''
    Read and re-verify a schedule file.

    Raises
    ------
    ConstraintError
        Malformed file, a violated constraint, or a fingerprint that does not
        match the content
    '''
    with open(path, "r") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as err:
            raise ConstraintError(f"Schedule file {path} is not JSON: {err}")
    if not isinstance(data, dict):
        raise ConstraintError(f"Schedule file {path} does not hold an object")
    schedule = schedule_from_dict(data, **kwargs)
    stored = data.get("fingerprint", None)
    if stored is not None and stored != schedule_fingerprint(schedule):
        raise ConstraintError(f"Fingerprint mismatch in {path}: the file was modified")
    return schedule
