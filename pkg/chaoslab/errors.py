'''
Exception classes for the chaoslab library
'''

# ----- Level 1 -----
class ChaosLabError(Exception):
    '''
    Base class for exceptions specific to chaoslab
    '''


# ----- Level 2 -----
class ArgumentError(ChaosLabError):
    '''
    Incorrect argument given in some way: a value outside its domain, or a
    precondition of the requested estimate that does not hold
    '''


class HorizonError(ChaosLabError):
    '''
    A time index or cylinder index lies beyond the levels that have been
    built. Build a schedule with more levels.
    '''


class ConstraintError(ChaosLabError):
    '''
    A schedule violates one of the constraints of its construction, or a
    schedule file does not describe a valid schedule
    '''


class CertificateError(ChaosLabError):
    '''
    A certificate was requested in a situation where none can be issued,
    e.g. from a capped schedule
    '''
