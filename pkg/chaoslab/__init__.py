"""Exact-arithmetic laboratory for a distributionally chaotic cylinder system

Subpackages
-----------
general
    exact rational primitives (floor sums, circle distance, arc hit counts,
    serialisation, sampling, worker pool)
construction
    piecewise linear interval maps, level maps and the block schedule
dynamics
    points, metrics and the step maps F (cylinders) and f (fibers)
analysis
    orbit runs, distribution profiles, factor witnesses, extension case
    certificates and pair classification


cli
    command line interface
defaults
    default values for keyword parameters
errors
    exception hierarchy
"""
from chaoslab import defaults
from chaoslab import errors
from chaoslab import general
from chaoslab import construction
from chaoslab import dynamics
from chaoslab import analysis

__author__ = """chaoslab developers"""
__version__ = '0.1.0'
