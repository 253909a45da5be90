from chaoslab.general.validateKeyword import (validate_keyword_rational,
        validate_keyword_big_int, validate_keyword_delta,
        validate_keyword_delta_grid, validate_keyword_unit)
from chaoslab.general.floorSum import floor_sum
from chaoslab.general.circleDistance import normalise_angle, circle_dist
from chaoslab.general.arcHitCount import arc_hit_count, count_rotation_hits
from chaoslab.general.lemmaBound import lemma1_bound_check, turn_bound, in_rigorous_regime
from chaoslab.general.serialize import (rational_to_str, rational_from_str,
        approx_decimal, to_jsonable, canonical_json, fingerprint)
from chaoslab.general.sampling import RationalSampler
from chaoslab.general.parallel import worker_count, parallel_map


__all__ = ['validate_keyword_rational', 'validate_keyword_big_int',
           'validate_keyword_delta', 'validate_keyword_delta_grid',
           'validate_keyword_unit', 'floor_sum', 'normalise_angle',
           'circle_dist', 'arc_hit_count', 'count_rotation_hits',
           'lemma1_bound_check', 'turn_bound', 'in_rigorous_regime',
           'rational_to_str', 'rational_from_str', 'approx_decimal',
           'to_jsonable', 'canonical_json', 'fingerprint', 'RationalSampler',
           'worker_count', 'parallel_map']
