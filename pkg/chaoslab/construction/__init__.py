from chaoslab.construction.plMap import PLMap, IDENTITY, apply, iterate
from chaoslab.construction.levelMaps import (LevelMaps, make_h, compute_n_l,
        compute_eps_l, build_level, level_threshold, escape_holds)
from chaoslab.construction.rationalEnumeration import rational_enumeration
from chaoslab.construction.schedule import (BlockDescriptor, LevelRecord,
        Schedule, build_schedule, check_schedule, schedule_violations,
        resolve_g, resolve_psi, distr_trend, level_record)
from chaoslab.construction.scheduleFile import (schedule_to_dict,
        schedule_from_dict, save_schedule, load_schedule, schedule_fingerprint)


__all__ = ['PLMap', 'IDENTITY', 'apply', 'iterate', 'LevelMaps', 'make_h',
           'compute_n_l', 'compute_eps_l', 'build_level', 'level_threshold',
           'escape_holds', 'rational_enumeration', 'BlockDescriptor',
           'LevelRecord', 'Schedule', 'build_schedule', 'check_schedule',
           'schedule_violations', 'resolve_g', 'resolve_psi', 'distr_trend',
           'level_record', 'schedule_to_dict', 'schedule_from_dict',
           'save_schedule', 'load_schedule', 'schedule_fingerprint']
