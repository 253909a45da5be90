# Closed-form orbit structure
from chaoslab.analysis.orbitRuns import Run, orbit_runs, advance, merged_runs

# Distribution functions
from chaoslab.analysis.distributionProfile import (DistributionProfile,
        empirical_phi, block_exact_phi, angle_phi, profile)

# Factor: witness blocks
from chaoslab.analysis.factorBlocks import (factor_block_profile,
        find_dc1_witness_blocks, witness_windows, entry_side)

# Extension: case split and certificates
from chaoslab.analysis.extensionCases import (CaseTag, extension_case_classify,
        extension_phistar_bound, isometry_certificate, substitution_certificate,
        height_witness_level)

# Verdicts
from chaoslab.analysis.classifyPair import PairVerdict, classify_pair_DC, examined_horizons
from chaoslab.analysis.liYorke import li_yorke_check

__all__ = ["Run", "orbit_runs", "advance", "merged_runs", "DistributionProfile",
           "empirical_phi", "block_exact_phi", "angle_phi", "profile",
           "factor_block_profile", "find_dc1_witness_blocks", "witness_windows",
           "entry_side", "CaseTag", "extension_case_classify",
           "extension_phistar_bound", "isometry_certificate",
           "substitution_certificate", "height_witness_level", "PairVerdict",
           "classify_pair_DC", "examined_horizons", "li_yorke_check"]
