import math
import random
from fractions import Fraction

import pytest

from mirrormaps import exactmath


def test_factorial_matches_math():
    for n in range(10):
        assert exactmath.factorial(n) == math.factorial(n)
    with pytest.raises(ValueError):
        exactmath.factorial(-1)


def test_harmonic_small_values():
    assert exactmath.harmonic(0) == 0
    assert exactmath.harmonic(1) == 1
    assert exactmath.harmonic(3) == Fraction(11, 6)
    assert exactmath.harmonic(5) == Fraction(137, 60)
    with pytest.raises(ValueError):
        exactmath.harmonic(-2)


def test_harmonic_cache_is_consistent_after_big_jump():
    # the memo grows in place; a large call must not corrupt small ones
    big = exactmath.harmonic(300)
    assert big == sum(Fraction(1, i) for i in range(1, 301))
    assert exactmath.harmonic(2) == Fraction(3, 2)


def test_comb_known_values():
    assert exactmath.comb([]) == 1
    assert exactmath.comb([7]) == 1
    assert exactmath.comb([2, 3]) == 10
    assert exactmath.comb([1, 1, 1, 1, 1]) == 120
    assert exactmath.comb([2, 2, 2, 2, 2]) == 113400
    with pytest.raises(ValueError):
        exactmath.comb([2, -1])


def test_comb_matches_factorial_formula():
    rng = random.Random(7)
    for _ in range(60):
        ks = [rng.randrange(0, 7) for _ in range(rng.randrange(1, 5))]
        want = math.factorial(sum(ks))
        for k in ks:
            want //= math.factorial(k)
        assert exactmath.comb(ks) == want


def test_comb_extended_simple_cases():
    # one slot at -1, the rest summing to the total
    assert exactmath.comb_extended([2, -1], 1) == Fraction(
        math.factorial(1) * math.factorial(0), math.factorial(2))
    # sign alternates with the negative entry
    assert exactmath.comb_extended([3, -1], 1) > 0
    assert exactmath.comb_extended([4, -2], 1) < 0
    assert exactmath.comb_extended([5, -3], 1) > 0


def test_comb_extended_formula():
    rng = random.Random(11)
    for _ in range(80):
        m = rng.randrange(2, 5)
        j = rng.randrange(m)
        ks = [rng.randrange(0, 6) for _ in range(m)]
        ks[j] = -rng.randrange(1, 4)
        if sum(ks) < 0:
            continue
        got = exactmath.comb_extended(ks, j)
        sign = 1 if (ks[j] + 1) % 2 == 0 else -1
        num = math.factorial(sum(ks)) * math.factorial(-ks[j] - 1)
        den = 1
        for i, k in enumerate(ks):
            if i != j:
                den *= math.factorial(k)
        assert got == Fraction(sign * num, den)


def test_comb_extended_input_validation():
    with pytest.raises(ValueError):
        exactmath.comb_extended([1, 2], 1)        # slot not negative
    with pytest.raises(ValueError):
        exactmath.comb_extended([-1, -1, 5], 0)   # two negative slots
    with pytest.raises(ValueError):
        exactmath.comb_extended([1, -3], 1)       # negative total
    with pytest.raises(ValueError):
        exactmath.comb_extended([1, -1], 5)       # slot out of range
