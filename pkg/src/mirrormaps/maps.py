"""The period series and both mirror maps of a vector configuration.

Conventions, fixed once for the whole package:

  * every series is indexed by full slot exponent tuples, one variable
    per input vector, graded by a weight functional from `monoid`;
  * the naive map of a slot is the exponential of the ratio of its log
    period by the principal period;
  * the true map multiplies the naive map by the exponential of the
    correction ratio, whose numerator runs over the slot's corrective
    set.  Computed under the slot-adapted weight, the truncation is the
    exact truncation of the full series.

Slot indices are 0-based everywhere.
"""

from __future__ import annotations

from fractions import Fraction

from . import exactmath, monoid
from .lattice import VectorConfig
from .monoid import WeightFunctional
from .series import GradedSeries


def _group_tuples(config: VectorConfig, k) -> list[tuple[int, ...]]:
    return [tuple(k[s] for s in config.group_slots(i))
            for i in range(len(config.groups))]


def period_factor(config: VectorConfig, k) -> int:
    """Product over groups of the multinomial factor at one exponent."""
    out = 1
    for part in _group_tuples(config, k):
        out *= exactmath.comb(part)
    return out


def principal_period(config: VectorConfig, bound: int,
                     weight: WeightFunctional | None = None) -> GradedSeries:
    """Sum of the multinomial factors over the nonnegative monoid."""
    w = weight if weight is not None else WeightFunctional.ones(config.size)
    terms = {}
    for k in monoid.nonnegative_elements(config, bound, w):
        terms[k] = Fraction(period_factor(config, k))
    return GradedSeries(w, bound, terms)


def log_period(config: VectorConfig, slot: int, bound: int,
               weight: WeightFunctional | None = None) -> GradedSeries:
    """The slot's logarithmic period: multinomial factor times the
    harmonic difference between the group sum and the slot entry."""
    w = weight if weight is not None else WeightFunctional.ones(config.size)
    group = config.group_of_slot(slot)
    gslots = config.group_slots(group)
    terms = {}
    for k in monoid.nonnegative_elements(config, bound, w):
        factor = period_factor(config, k)
        gsum = sum(k[s] for s in gslots)
        c = factor * (exactmath.harmonic(gsum) - exactmath.harmonic(k[slot]))
        if c:
            terms[k] = c
    return GradedSeries(w, bound, terms)


def correction_series(config: VectorConfig, slot: int, bound: int,
                      weight: WeightFunctional | None = None) -> GradedSeries:
    """Sum over the slot's corrective set with the extended multinomial
    factor on the slot's group.  Zero when the set is empty."""
    w = weight if weight is not None else WeightFunctional.for_slot(config.size, slot)
    group = config.group_of_slot(slot)
    j_local = slot - config.group_slots(group).start
    terms = {}
    for k in monoid.negative_slot_elements(config, slot, bound, w):
        parts = _group_tuples(config, k)
        c = Fraction(1)
        for i, part in enumerate(parts):
            if i == group:
                c *= exactmath.comb_extended(part, j_local)
            else:
                c *= exactmath.comb(part)
        if c:
            terms[k] = c
    return GradedSeries(w, bound, terms)


def log_ratio(config: VectorConfig, slot: int, bound: int,
              weight: WeightFunctional | None = None) -> GradedSeries:
    """Log period divided by the principal period; the log of the naive map."""
    w = weight if weight is not None else WeightFunctional.ones(config.size)
    phi0 = principal_period(config, bound, w)
    return log_period(config, slot, bound, w).divide_by_unit(phi0)


def naive_mirror_map(config: VectorConfig, slot: int, bound: int,
                     weight: WeightFunctional | None = None) -> GradedSeries:
    return log_ratio(config, slot, bound, weight).exp()


def correction_factor(config: VectorConfig, slot: int, bound: int,
                      weight: WeightFunctional | None = None) -> GradedSeries:
    """Exponential of the correction ratio; the constant series 1 when
    the corrective set is empty."""
    w = weight if weight is not None else WeightFunctional.for_slot(config.size, slot)
    phi0 = principal_period(config, bound, w)
    tau = correction_series(config, slot, bound, w)
    return tau.divide_by_unit(phi0).exp()


def true_mirror_map(config: VectorConfig, slot: int, bound: int,
                    weight: WeightFunctional | None = None,
                    direct: bool = False) -> GradedSeries:
    """Naive map times correction factor, under the slot-adapted weight.

    With direct=True the same series is computed in one stroke as the
    exponential of (log period + correction) over the principal period;
    the two routes must agree exactly and the checker's cross-check
    mode exercises that.
    """
    w = weight if weight is not None else WeightFunctional.for_slot(config.size, slot)
    phi0 = principal_period(config, bound, w)
    phi = log_period(config, slot, bound, w)
    tau = correction_series(config, slot, bound, w)
    if direct:
        return (phi + tau).divide_by_unit(phi0).exp()
    naive = phi.divide_by_unit(phi0).exp()
    return naive * tau.divide_by_unit(phi0).exp()


def collapse_to_generator(series: GradedSeries, generator) -> GradedSeries:
    """Rewrite a series supported on multiples of one vector as a series
    in a single variable, the multiple."""
    g = tuple(int(x) for x in generator)
    if not any(g):
        raise ValueError("generator must be nonzero")
    pivot = next(i for i, x in enumerate(g) if x)
    w1 = WeightFunctional((max(series.weight(g), 1),))
    terms = {}
    for k, c in series.terms.items():
        m, r = divmod(k[pivot], g[pivot])
        if r or k != tuple(m * x for x in g):
            raise ValueError("support exponent %r is not a multiple of %r" % (k, g))
        terms[(m,)] = c
    return GradedSeries(w1, series.bound, terms)


def quintic_config() -> VectorConfig:
    """One group of five vectors: the four unit vectors and minus their sum."""
    vs = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
          (-1, -1, -1, -1)]
    return VectorConfig.single_group(vs)


def quintic_q_series(order: int) -> GradedSeries:
    """The classical one-parameter combination q^5 times the fifth power
    of the quintic's naive map evaluated at q^5, as a series in q."""
    cfg = quintic_config()
    inner = (order - 5) // 5 if order >= 5 else -1
    if inner < 0:
        return GradedSeries.zero(WeightFunctional.ones(1), max(order, 0))
    psi = naive_mirror_map(cfg, 0, 5 * inner)
    univ = collapse_to_generator(psi, (1, 1, 1, 1, 1))
    univ = GradedSeries(WeightFunctional.ones(1), inner, univ.terms)
    fifth = univ ** 5
    wq = WeightFunctional.ones(1)
    terms = {(5 * m + 5,): c for (m,), c in fifth.terms.items()}
    return GradedSeries(wq, order, terms)


__all__ = [
    "period_factor", "principal_period", "log_period", "correction_series", "log_ratio",
    "naive_mirror_map", "correction_factor", "true_mirror_map",
    "collapse_to_generator", "quintic_config", "quintic_q_series",
]
