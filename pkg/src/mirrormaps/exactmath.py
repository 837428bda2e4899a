"""Exact combinatorial scalars: factorials, harmonic numbers, multinomials.

All values are Python ints or fractions.Fraction.  The extended multinomial
accepts exactly one negative argument and returns a rational that can carry
a sign, which is what the correction series is built from.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

_HARMONIC: list[Fraction] = [Fraction(0)]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of negative %d" % n)
    return math.factorial(n)


def harmonic(n: int) -> Fraction:
    """H(n) = 1 + 1/2 + ... + 1/n, with H(0) = 0."""
    if n < 0:
        raise ValueError("harmonic number of negative %d" % n)
    while len(_HARMONIC) <= n:
        _HARMONIC.append(_HARMONIC[-1] + Fraction(1, len(_HARMONIC)))
    return _HARMONIC[n]


def comb(ks: Sequence[int]) -> int:
    """Multinomial (sum ks)! / prod ks!, all arguments nonnegative.

    Computed as a running product of binomials so no oversized factorial
    is materialized.
    """
    total = 0
    out = 1
    for k in ks:
        if k < 0:
            raise ValueError("comb argument %d is negative" % k)
        total += k
        out *= math.comb(total, k)
    return out


def comb_extended(ks: Sequence[int], j: int) -> Fraction:
    """Multinomial extended to exactly one negative slot.

    For ks with ks[j] < 0, all other entries >= 0 and sum(ks) >= 0:

        (-1)^(ks[j]+1) * (sum ks)! * (-ks[j]-1)! / prod_{i != j} ks[i]!

    The sign alternates with the negative entry; the value is rational
    with denominator dividing the product of the nonnegative factorials.
    """
    if not 0 <= j < len(ks):
        raise ValueError("slot %d out of range" % j)
    kj = ks[j]
    if kj >= 0:
        raise ValueError("slot %d must be negative, got %d" % (j, kj))
    rest = [k for i, k in enumerate(ks) if i != j]
    if any(k < 0 for k in rest):
        raise ValueError("only slot %d may be negative" % j)
    total = sum(ks)
    if total < 0:
        raise ValueError("entries sum to %d < 0" % total)
    sign = -1 if (kj + 1) % 2 else 1
    numerator = math.factorial(total) * math.factorial(-kj - 1)
    denominator = math.prod(math.factorial(k) for k in rest)
    return Fraction(sign * numerator, denominator)
