"""Provide the floor sum used for exact lattice counting"""

from chaoslab.errors import ArgumentError


def floor_sum(n, m, a, b):
    '''
    Sum of `floor((a*i + b) / m)` over `0 <= i < n`, computed exactly.

    The sum is evaluated with a Euclid-style recursion, swapping the roles of
    `a` and `m` at each round, so the running time is logarithmic in the
    arguments rather than linear in `n`. This is what makes it possible to
    count proximity events over orbit blocks of astronomical length.

    Parameters
    ----------
    n : int
        Number of terms, `n >= 0`
    m : int
        Denominator, `m >= 1`
    a : int
        Slope. May be negative
    b : int
        Offset. May be negative

    Returns
    -------
    total : int

    Raises
    ------
    ArgumentError
        `m` not positive or `n` negative

    Notes
    --------
    Negative `a` and `b` are reduced into `[0, m)` first, with a compensating
    term: `floor((a*i + b)/m) = floor(((a mod m)*i + (b mod m))/m)
    + (a div m)*i + (b div m)`.
    '''
    n, m, a, b = int(n), int(m), int(a), int(b)
    if m <= 0:
        raise ArgumentError(f"floor_sum requires m >= 1. You provided {m}")
    if n < 0:
        raise ArgumentError(f"floor_sum requires n >= 0. You provided {n}")

    total = 0
    if a < 0 or a >= m:
        q, a = divmod(a, m)
        total += q * (n * (n - 1) // 2)
    if b < 0 or b >= m:
        q, b = divmod(b, m)
        total += q * n

    # From here on 0 <= a, b < m
    while True:
        if a >= m:
            total += (n * (n - 1) // 2) * (a // m)
            a %= m
        if b >= m:
            total += n * (b // m)
            b %= m
        y_max = a * n + b
        if y_max < m:
            break
        n, b = divmod(y_max, m)
        m, a = a, m
    return total
