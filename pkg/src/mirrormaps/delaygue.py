"""Delaygue-style integrality criterion and the rank-one special case.

When the nonnegative monoid of a configuration is free on r generators,
the period data translates into two lists of vectors in N^r: one e-vector
per group (the group sums of the generators) and one f-vector per slot
(the slot rows of the generator matrix).  The floor defect of that data
decides integrality of the associated hypergeometric maps, and the
package checks its agreement with the polytope's Fano property.

The defect condition is decided exactly for rank one (the defect is a
step function with known breakpoints) and by dense rational grid
sampling for higher rank, where any violation found is re-verified in
exact arithmetic before being reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exactmath, monoid, polytope
from .lattice import VectorConfig
from .maps import period_factor, principal_period
from .monoid import WeightFunctional
from .series import GradedSeries

# grid denominators divide lcm(1..12) so small breakpoints land on the grid
_SMOOTH = 27720
DEFAULT_SAMPLE_BUDGET = 2_000_000
_GRID_HARD_CAP = 100_000_000


@dataclass(frozen=True)
class DelaygueData:
    """Free-monoid translation of a configuration."""

    config: VectorConfig
    generators: tuple[tuple[int, ...], ...]  # r monoid generators, slot tuples
    evecs: tuple[tuple[int, ...], ...]       # one per group, in N^r
    fvecs: tuple[tuple[int, ...], ...]       # one per slot, in N^r

    @property
    def rank(self) -> int:
        return len(self.generators)

    def induced_weight(self) -> WeightFunctional:
        """Weight on exponent r-tuples matching the slot coordinate sum."""
        return WeightFunctional(tuple(sum(g) for g in self.generators))


def to_delaygue(config: VectorConfig, verify_bound: int = 12) -> DelaygueData:
    """Translate a configuration with free nonnegative monoid.

    Raises ValueError when the monoid is not free.  The translation is
    verified on construction: the rank-r term series embedded back into
    slot exponents must reproduce the principal period up to the given
    weight bound.
    """
    result = monoid.free_monoid_basis(config)
    if not result.is_free:
        raise ValueError("nonnegative monoid is not free: %s" % result.reason)
    gens = result.generators
    r = len(gens)
    fvecs = tuple(tuple(g[s] for g in gens) for s in range(config.size))
    evecs = tuple(tuple(sum(g[s] for s in config.group_slots(i)) for g in gens)
                  for i in range(len(config.groups)))
    data = DelaygueData(config, gens, evecs, fvecs)
    if r and verify_bound >= 0:
        got = embed_to_slots(data, f_series(data, verify_bound))
        want = principal_period(config, verify_bound)
        if got != want:
            raise RuntimeError("internal bug: translation does not reproduce "
                               "the principal period")
    return data


def _exponent_grid(weights: tuple[int, ...], bound: int) -> list[tuple[int, ...]]:
    """All n in N^r with weights . n <= bound; weights must be positive."""
    out: list[tuple[int, ...]] = []

    def rec(pos: int, left: int, prefix: tuple[int, ...]) -> None:
        if pos == len(weights):
            out.append(prefix)
            return
        step = weights[pos]
        for v in range(left // step + 1):
            rec(pos + 1, left - v * step, prefix + (v,))

    rec(0, bound, ())
    return out


def _term_ratio(data: DelaygueData, n: tuple[int, ...]) -> Fraction:
    num = 1
    for e in data.evecs:
        num *= exactmath.factorial(sum(a * b for a, b in zip(e, n)))
    den = 1
    for f in data.fvecs:
        den *= exactmath.factorial(sum(a * b for a, b in zip(f, n)))
    return Fraction(num, den)


def f_series(data: DelaygueData, bound: int) -> GradedSeries:
    """Rank-r term series: factorial ratios of e- against f-dots."""
    w = data.induced_weight()
    if any(c <= 0 for c in w.coeffs):
        raise ValueError("induced weight must be positive")
    terms = {n: _term_ratio(data, n) for n in _exponent_grid(w.coeffs, bound)}
    return GradedSeries(w, bound, terms)


def g_series(data: DelaygueData, slot: int, bound: int) -> GradedSeries:
    """Companion log series for one slot: term ratio times the harmonic
    difference between the slot's group dot and the slot dot."""
    w = data.induced_weight()
    group = data.config.group_of_slot(slot)
    e = data.evecs[group]
    f = data.fvecs[slot]
    terms = {}
    for n in _exponent_grid(w.coeffs, bound):
        h = (exactmath.harmonic(sum(a * b for a, b in zip(e, n)))
             - exactmath.harmonic(sum(a * b for a, b in zip(f, n))))
        if h:
            terms[n] = _term_ratio(data, n) * h
    return GradedSeries(w, bound, terms)


def q_series(data: DelaygueData, slot: int, bound: int) -> GradedSeries:
    """Exponential of g over f; the naive map in rank-r coordinates."""
    return g_series(data, slot, bound).divide_by_unit(f_series(data, bound)).exp()


def embed_to_slots(data: DelaygueData, series: GradedSeries) -> GradedSeries:
    """Push a rank-r series through the monoid isomorphism into slot
    exponents.  Injective, since the generators are independent."""
    size = data.config.size
    w = WeightFunctional.ones(size)
    terms: dict[tuple[int, ...], Fraction] = {}
    for n, c in series.terms.items():
        k = tuple(sum(n[l] * data.generators[l][s] for l in range(data.rank))
                  for s in range(size))
        if k in terms:
            raise RuntimeError("internal bug: embedding collided at %r" % (k,))
        terms[k] = c
    return GradedSeries(w, series.bound, terms)


# -- floor defect and the criterion -------------------------------------


def floor_defect(data: DelaygueData, x) -> int:
    """Sum of e-dot floors minus sum of f-dot floors at a rational point.

    Computed in two algebraically equal forms (floors directly, and via
    fractional parts using sum(e) == sum(f)); a mismatch would be an
    arithmetic bug and raises.
    """
    xs = tuple(Fraction(v) for v in x)
    edots = [sum(a * v for a, v in zip(e, xs)) for e in data.evecs]
    fdots = [sum(a * v for a, v in zip(f, xs)) for f in data.fvecs]
    form1 = sum(math.floor(t) for t in edots) - sum(math.floor(t) for t in fdots)
    form2 = sum(t - math.floor(t) for t in fdots) - sum(t - math.floor(t) for t in edots)
    if form1 != form2:
        raise RuntimeError("internal bug: floor defect forms disagree at %r" % (xs,))
    return form1


def _triggered(data: DelaygueData, xs: tuple[Fraction, ...]) -> bool:
    return any(sum(a * v for a, v in zip(e, xs)) >= 1 for e in data.evecs)


@dataclass(frozen=True)
class CriterionResult:
    """Outcome of the defect criterion over the half-open unit box."""

    holds: bool
    exact: bool          # True when the decision procedure is exhaustive
    witness: tuple[Fraction, ...] | None  # exact violating point, if any
    samples: int
    denominator: int | None  # grid denominator in sampled mode


def default_denominator(rank: int, budget: int = DEFAULT_SAMPLE_BUDGET) -> int:
    """Largest divisor of lcm(1..12) whose rank-th power fits the budget.

    Never below 60, so grid columns always hit every fraction with
    denominator up to 6; if even 60 overruns the hard grid cap the
    caller must pick a denominator explicitly.
    """
    best = 1
    for q in range(1, _SMOOTH + 1):
        if _SMOOTH % q == 0 and q ** rank <= budget:
            best = q
    if best >= 60:
        return best
    if 60 ** rank > _GRID_HARD_CAP:
        raise ValueError(
            "no default grid denominator for rank %d within the sample cap; "
            "pass one explicitly" % rank)
    return 60


def _exact_rank1(data: DelaygueData) -> CriterionResult:
    entries = [e[0] for e in data.evecs] + [f[0] for f in data.fvecs]
    cuts = {Fraction(0)}
    for v in entries:
        for m in range(1, v):
            cuts.add(Fraction(m, v))
    points = sorted(cuts)
    # the defect and the trigger are constant on [cut, next cut), so the
    # cut points decide the box exhaustively; midpoints are a guard
    probes = list(points)
    for a, b in zip(points, points[1:] + [Fraction(1)]):
        probes.append((a + b) / 2)
    probes.sort()
    for xv in probes:
        xs = (xv,)
        if _triggered(data, xs) and floor_defect(data, xs) < 1:
            return CriterionResult(False, True, xs, len(probes), None)
    return CriterionResult(True, True, None, len(probes), None)


def _sampled(data: DelaygueData, q: int) -> CriterionResult:
    r = data.rank
    emat = np.array(data.evecs, dtype=np.int64)
    fmat = np.array(data.fvecs, dtype=np.int64)
    # int64 headroom for the dot products
    biggest = max(int(emat.sum(axis=1).max(initial=0)),
                  int(fmat.sum(axis=1).max(initial=0)))
    if biggest * q >= 2 ** 62:
        raise ValueError("grid denominator too large for exact integer dots")
    total = q ** r
    chunk = 1 << 18
    shape = (q,) * r
    for lo in range(0, total, chunk):
        idx = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        cols = np.unravel_index(idx, shape)
        m = np.stack(cols, axis=1)  # lex-ordered exponent rows
        efloor = (m @ emat.T) // q
        ffloor = (m @ fmat.T) // q
        trigger = (efloor >= 1).any(axis=1)
        defect = efloor.sum(axis=1) - ffloor.sum(axis=1)
        viol = trigger & (defect < 1)
        if viol.any():
            row = m[int(np.argmax(viol))]
            xs = tuple(Fraction(int(v), q) for v in row)
            if not _triggered(data, xs) or floor_defect(data, xs) >= 1:
                raise RuntimeError("internal bug: grid violation failed "
                                   "exact re-verification at %r" % (xs,))
            return CriterionResult(False, False, xs, total, q)
    return CriterionResult(True, False, None, total, q)


def criterion_check(data: DelaygueData, denominator: int | None = None,
                    budget: int = DEFAULT_SAMPLE_BUDGET) -> CriterionResult:
    """Does the floor defect stay >= 1 wherever some e-dot reaches 1?

    Exhaustive for rank 0 and 1.  For higher rank the unit box is
    sampled on the grid with the given denominator (default: a smooth
    number fitted to the budget); a reported violation is always exact,
    a pass is a sampled verdict.
    """
    if data.rank == 0:
        return CriterionResult(True, True, None, 1, None)
    if data.rank == 1:
        return _exact_rank1(data)
    q = denominator if denominator is not None else default_denominator(data.rank, budget)
    if q < 1:
        raise ValueError("denominator must be positive")
    return _sampled(data, q)


@dataclass(frozen=True)
class EquivalenceReport:
    """Fano property versus defect criterion, side by side."""

    applicable: bool
    reason: str                       # empty when applicable
    fano: bool | None = None
    criterion: CriterionResult | None = None
    agree: bool | None = None


def fano_criterion_agreement(config: VectorConfig,
                             denominator: int | None = None,
                             budget: int = DEFAULT_SAMPLE_BUDGET) -> EquivalenceReport:
    """Compare the polytope's Fano property with the defect criterion.

    Not applicable when the nonnegative monoid is not free (there is no
    translation to test).
    """
    freeness = monoid.free_monoid_basis(config)
    if not freeness.is_free:
        return EquivalenceReport(False, freeness.reason)
    data = to_delaygue(config)
    fano = polytope.is_fano(config)
    crit = criterion_check(data, denominator=denominator, budget=budget)
    return EquivalenceReport(True, "", fano, crit, fano == crit.holds)


# -- rank-one sequence conditions ----------------------------------------


@dataclass(frozen=True)
class Rank1Report:
    """Term-sequence conditions for configurations of kernel rank one."""

    applicable: bool
    reason: str                          # empty when applicable
    a: tuple[int, ...] | None = None     # term sequence a_0..a_{count-1}
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool | None:
        if not self.applicable:
            return None
        return not self.failures


def rank1_sequences(config: VectorConfig, count: int
                    ) -> tuple[tuple[int, ...], list[list[Fraction]]]:
    """Term sequence a_n and per-slot harmonic gaps c_n, n < count.

    Requires a free rank-one monoid; a_n is the multinomial factor of n
    times the generator, c_n the harmonic difference driving the log
    period at that multiple.
    """
    data = to_delaygue(config)
    if data.rank != 1:
        raise ValueError("rank-one sequences need kernel rank 1, got %d" % data.rank)
    gen = data.generators[0]
    a = []
    for n in range(count):
        k = tuple(n * x for x in gen)
        a.append(period_factor(config, k))
    cs = []
    for slot in range(config.size):
        e = data.evecs[config.group_of_slot(slot)][0]
        f = data.fvecs[slot][0]
        cs.append([exactmath.harmonic(e * n) - exactmath.harmonic(f * n)
                   for n in range(count)])
    return tuple(a), cs


def check_rank1_conditions(config: VectorConfig, count: int = 8) -> Rank1Report:
    """Check a_0 == 1, a_1 > 0, log-convexity of a_n, and that every
    slot's harmonic gap sequence is nonnegative and nondecreasing."""
    if count < 3:
        raise ValueError("need at least three terms")
    freeness = monoid.free_monoid_basis(config)
    if not freeness.is_free:
        return Rank1Report(False, "nonnegative monoid is not free: %s" % freeness.reason)
    if len(freeness.generators) != 1:
        return Rank1Report(False, "kernel rank is %d, conditions need rank 1"
                           % len(freeness.generators))
    a, cs = rank1_sequences(config, count)
    failures = []
    if a[0] != 1:
        failures.append("a_0 = %d, expected 1" % a[0])
    if a[1] <= 0:
        failures.append("a_1 = %d is not positive" % a[1])
    for n in range(1, count - 1):
        if a[n] * a[n] > a[n - 1] * a[n + 1]:
            failures.append("log-convexity fails at n=%d" % n)
            break
    for slot, c in enumerate(cs):
        bad = next((n for n in range(1, count) if c[n] < c[n - 1]), None)
        if bad is not None:
            failures.append("slot %d harmonic gap decreases at n=%d" % (slot, bad))
    return Rank1Report(True, "", tuple(a), tuple(failures))


__all__ = [
    "DelaygueData", "to_delaygue", "f_series", "g_series", "q_series",
    "embed_to_slots", "floor_defect", "CriterionResult", "criterion_check",
    "default_denominator", "EquivalenceReport", "fano_criterion_agreement",
    "Rank1Report", "rank1_sequences", "check_rank1_conditions",
    "DEFAULT_SAMPLE_BUDGET",
]
