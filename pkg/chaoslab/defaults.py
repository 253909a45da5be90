'''chaoslab default values

This module provides default values for all keyword arguments in the chaoslab
package. Rational defaults are given as `Fraction` so that no floating point
value ever enters a computation.

'''
from fractions import Fraction


'''Distribution functions'''
#: Distance thresholds at which distribution functions are evaluated
delta_grid = (Fraction(1, 10), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2),
              Fraction(9, 10))

#: Tolerance used when reading finite-horizon fractions as "zero" or "one"
dc_tolerance = Fraction(1, 10)

#: Levels below this one are not used as examined horizons when estimating
#: lim inf / lim sup of window fractions
burn_in_level = 2

#: Computation mode for distribution profiles. One of `profile_modes`
profile_mode = "block_exact"
profile_modes = ("block_exact", "empirical")



'''Schedule construction'''
#: Number of levels built by default
levels = 6

#: Cap on the identity-block length. None builds the true schedule
cap = None

#: Upper bound on the iterations tried when searching for an escape time n_l
max_escape_steps = 10**6



'''Certificates'''
#: Threshold used by the extension certificates
certificate_delta = Fraction(1, 10)

#: Levels used by the extension certificate, when not provided
certificate_levels = (2, 3, 4, 5)

#: Highest level scanned for factor witnesses. Only r_l and 1/l are needed, so
#: the scan reaches far beyond the built schedule. Heights of fiber 1 that
#: are at least 1/5 apart always meet a q-type level up to here
witness_levels = 41

#: Number of steps used for isometry certificates of case A pairs
isometry_steps = 1000



'''Sampling'''
#: Default seed of the portable generator
seed = 42

#: Number of random parameter sets for the rotation lemma suite
lemma_samples = 1000

#: Largest orbit length drawn by the rotation lemma suite
lemma_max_p = 10**12

#: Largest denominator of randomly drawn rationals
max_denominator = 64

#: Number of sampled pairs per certificate bundle
certificate_samples = 20



'''Output'''
#: Version tag embedded in every report
schema_version = "chaoslab-report/1"

#: Significant digits of the (approximate) decimal CSV output
csv_digits = 12

#: Supported output formats
formats = ("json", "csv")

#: Environment variable capping the number of worker processes
threads_env = "CHAOS_LAB_THREADS"
