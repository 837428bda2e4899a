"""Verdict pipeline: pick truncation bounds, run checks, assemble reports.

A check request names a vector family, a precision P, and a list of
checks.  Bounds are chosen so that at least P exponents are covered
(least such bound, for determinism), every series is computed in exact
rational arithmetic, and each failing verdict carries a concrete
witness that can be recomputed standalone.  Reports are frozen plain
data so batches can fan out across worker processes.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import delaygue, maps, monoid, polytope
from .lattice import VectorConfig, validate_config
from .series import GradedSeries, integrality_verdict, nonnegativity_verdict

CHECK_NAMES = (
    "fano",
    "reflexive",
    "naive-integrality",
    "log-positivity",
    "true-integrality",
    "delaygue-equivalence",
    "rank1-conditions",
)

# the checks that make sense for every valid configuration; the last two
# need a free nonnegative monoid (and rank one, for the sequence checks)
DEFAULT_CHECKS = CHECK_NAMES[:5]


@dataclass(frozen=True)
class Witness:
    """One concrete offender behind a failing verdict.

    exponent is a lattice tuple (a series exponent, an interior point,
    or a facet normal depending on the note); point is a rational
    sample location for criterion violations.
    """

    note: str
    slot: int | None = None
    exponent: tuple[int, ...] | None = None
    value: Fraction | None = None
    point: tuple[Fraction, ...] | None = None


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    status: str                # "pass", "fail" or "skip"
    detail: str = ""
    witnesses: tuple[Witness, ...] = ()


@dataclass(frozen=True)
class CheckRequest:
    """What to verify: a configuration, a precision, and check names.

    The check list is normalized to the canonical CHECK_NAMES order so
    identical requests always produce identical reports.  Overrides pin
    the truncation bounds instead of deriving them from the precision;
    dprime_override applies to every slot.
    """

    config: VectorConfig
    precision: int
    checks: tuple[str, ...] = DEFAULT_CHECKS
    label: str = ""
    d_override: int | None = None
    dprime_override: int | None = None
    sampling_denominator: int | None = None
    cross_check: bool = False

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError("precision must be at least 1")
        unknown = sorted(set(self.checks) - set(CHECK_NAMES))
        if unknown:
            raise ValueError("unknown check name(s): %s" % ", ".join(unknown))
        wanted = set(self.checks)
        if not wanted:
            raise ValueError("at least one check must be requested")
        object.__setattr__(
            self, "checks", tuple(n for n in CHECK_NAMES if n in wanted))
        for field_name in ("d_override", "dprime_override"):
            v = getattr(self, field_name)
            if v is not None and v < 0:
                raise ValueError("%s must be nonnegative" % field_name)
        if self.sampling_denominator is not None and self.sampling_denominator < 1:
            raise ValueError("sampling_denominator must be positive")


@dataclass(frozen=True)
class CheckReport:
    """Everything one run produced: verdicts, bounds, counts, warnings.

    error is set (and outcomes empty) when validation rejected the
    configuration before any check could run.  config may be None in
    that case, for inputs that never parsed far enough to yield one.
    dprime and cone_counts are (slot, value) pairs for the slots the
    true-map check visited.  elapsed is wall-clock seconds and is the
    one field two identical runs may disagree on.
    """

    label: str
    config: VectorConfig | None
    precision: int
    ok: bool
    error: str | None = None
    outcomes: tuple[CheckOutcome, ...] = ()
    d: int | None = None
    k0_count: int | None = None
    dprime: tuple[tuple[int, int], ...] = ()
    cone_counts: tuple[tuple[int, int], ...] = ()
    warnings: tuple[str, ...] = ()
    elapsed: float = 0.0

    def outcome(self, name: str) -> CheckOutcome | None:
        for o in self.outcomes:
            if o.name == name:
                return o
        return None

    @property
    def failed_checks(self) -> tuple[str, ...]:
        return tuple(o.name for o in self.outcomes if o.status == "fail")


def run_check(request: CheckRequest) -> CheckReport:
    """Run the requested checks and assemble the report.

    Validation failures do not raise; they come back as a report with
    the error field set, so batch items stay independent.  Checks that
    do not apply to the configuration (the sequence conditions on a
    rank-two kernel, say) are reported as skipped, and skips never
    fail a run.
    """
    start = time.perf_counter()
    cfg = request.config
    validation = validate_config(cfg)
    if not validation.ok:
        return CheckReport(
            label=request.label, config=cfg, precision=request.precision,
            ok=False,
            error="invalid configuration: " + "; ".join(validation.reasons),
            elapsed=time.perf_counter() - start)

    warnings: list[str] = []
    fano = polytope.is_fano(cfg)
    if not fano:
        warnings.append(
            "configuration is not Fano; the integrality and positivity "
            "statements are posed for Fano data, so these verdicts are "
            "exploratory")

    needs_d = bool({"naive-integrality", "log-positivity"} & set(request.checks))
    d = None
    k0_count = None
    if needs_d:
        if request.d_override is not None:
            d = request.d_override
        else:
            d = monoid.weight_bound_for_count(cfg, request.precision)
        k0_count = len(monoid.nonnegative_elements(cfg, d))

    dprime: list[tuple[int, int]] = []
    cone_counts: list[tuple[int, int]] = []

    ratios: dict[int, GradedSeries] = {}

    def log_ratio(slot: int) -> GradedSeries:
        if slot not in ratios:
            ratios[slot] = maps.log_ratio(cfg, slot, d)
        return ratios[slot]

    def check_fano() -> CheckOutcome:
        if fano:
            return CheckOutcome(
                "fano", "pass", "origin is the unique interior lattice point")
        hull = polytope.config_polytope(cfg)
        extra = [p for p in polytope.interior_lattice_points(hull) if any(p)]
        if extra:
            wit = Witness("interior lattice point besides the origin",
                          exponent=extra[0])
        else:
            wit = Witness("origin is not an interior point of the hull")
        return CheckOutcome("fano", "fail",
                            "%d interior lattice points" % (len(extra) + 1),
                            (wit,))

    def check_reflexive() -> CheckOutcome:
        hull = polytope.config_polytope(cfg)
        if polytope.is_reflexive(hull):
            return CheckOutcome(
                "reflexive", "pass",
                "all %d facet inequalities have offset 1" % len(hull.facets))
        if not hull.is_full_dimensional:
            return CheckOutcome(
                "reflexive", "fail", "hull is not full-dimensional",
                (Witness("hull spans a proper subspace"),))
        if not polytope.contains_in_interior(hull, (0,) * hull.ambient):
            return CheckOutcome(
                "reflexive", "fail", "origin is not interior",
                (Witness("origin lies on or outside the boundary"),))
        normal, offset = next((a, b) for a, b in hull.facets if b != 1)
        wit = Witness("facet inequality with offset other than 1",
                      exponent=normal, value=Fraction(offset))
        return CheckOutcome("reflexive", "fail",
                            "facet offset %d" % offset, (wit,))

    def check_naive() -> CheckOutcome:
        wits = []
        for slot in range(cfg.size):
            verdict = integrality_verdict(log_ratio(slot).exp())
            if not verdict.ok:
                wits.append(Witness("non-integer coefficient in the naive map",
                                    slot=slot, exponent=verdict.offender,
                                    value=verdict.coefficient))
        if wits:
            return CheckOutcome(
                "naive-integrality", "fail",
                "%d slot(s) with a non-integer coefficient" % len(wits),
                tuple(wits))
        return CheckOutcome(
            "naive-integrality", "pass",
            "all %d slots integral over %d exponents (bound %d)"
            % (cfg.size, k0_count, d))

    def check_log_positivity() -> CheckOutcome:
        wits = []
        for slot in range(cfg.size):
            verdict = nonnegativity_verdict(log_ratio(slot))
            if not verdict.ok:
                wits.append(Witness("negative coefficient in the log ratio",
                                    slot=slot, exponent=verdict.offender,
                                    value=verdict.coefficient))
        if wits:
            return CheckOutcome(
                "log-positivity", "fail",
                "%d slot(s) with a negative coefficient" % len(wits),
                tuple(wits))
        return CheckOutcome(
            "log-positivity", "pass",
            "all %d slots nonnegative over %d exponents (bound %d)"
            % (cfg.size, k0_count, d))

    def check_true() -> CheckOutcome:
        wits = []
        crossed = False
        for slot in range(cfg.size):
            if request.dprime_override is not None:
                dp = request.dprime_override
            else:
                dp = monoid.slot_bound_for_count(cfg, slot, request.precision)
            dprime.append((slot, dp))
            cone_counts.append(
                (slot, len(monoid.cone_sum_elements(cfg, slot, dp))))
            factor = maps.correction_factor(cfg, slot, dp)
            verdict = integrality_verdict(factor)
            if not verdict.ok:
                wits.append(Witness(
                    "non-integer coefficient in the correction factor",
                    slot=slot, exponent=verdict.offender,
                    value=verdict.coefficient))
            true_map = maps.true_mirror_map(cfg, slot, dp)
            negative = nonnegativity_verdict(true_map)
            if not negative.ok:
                warnings.append(
                    "true map at slot %d has a negative coefficient %s at "
                    "exponent %s (informational; no sign is conjectured)"
                    % (slot, negative.coefficient, negative.offender))
            if request.cross_check:
                direct = maps.true_mirror_map(cfg, slot, dp, direct=True)
                if direct != true_map:
                    raise RuntimeError(
                        "true-map routes disagree at slot %d" % slot)
                crossed = True
        suffix = "; direct exponential route cross-checked" if crossed else ""
        if wits:
            return CheckOutcome(
                "true-integrality", "fail",
                "%d slot(s) with a non-integer coefficient%s"
                % (len(wits), suffix), tuple(wits))
        return CheckOutcome(
            "true-integrality", "pass",
            "correction factors integral for all %d slots%s"
            % (cfg.size, suffix))

    def check_equivalence() -> CheckOutcome:
        rep = delaygue.fano_criterion_agreement(
            cfg, denominator=request.sampling_denominator)
        if not rep.applicable:
            return CheckOutcome("delaygue-equivalence", "skip",
                                "not applicable: %s" % rep.reason)
        crit = rep.criterion
        mode = "exact" if crit.exact else "sampled"
        if not crit.exact:
            warnings.append(
                "defect criterion sampled on a grid (denominator %d, "
                "%d points); agreement is evidence, not a certificate"
                % (crit.denominator, crit.samples))
        detail = "Fano %s, criterion %s (%s, %d points)" % (
            rep.fano, crit.holds, mode, crit.samples)
        if rep.agree:
            return CheckOutcome("delaygue-equivalence", "pass", detail)
        if crit.witness is not None:
            wit = Witness("floor defect below 1 at a triggered point",
                          point=crit.witness)
        else:
            hull = polytope.config_polytope(cfg)
            extra = [p for p in polytope.interior_lattice_points(hull) if any(p)]
            wit = Witness(
                "criterion holds on the sample but the hull has an interior "
                "lattice point besides the origin",
                exponent=extra[0] if extra else None)
        return CheckOutcome("delaygue-equivalence", "fail", detail, (wit,))

    def check_rank1() -> CheckOutcome:
        depth = max(3, request.precision)
        rep = delaygue.check_rank1_conditions(cfg, count=depth)
        if not rep.applicable:
            return CheckOutcome("rank1-conditions", "skip",
                                "not applicable: %s" % rep.reason)
        if rep.ok:
            return CheckOutcome(
                "rank1-conditions", "pass",
                "term sequence and harmonic gaps verified for n < %d" % depth)
        return CheckOutcome("rank1-conditions", "fail",
                            "; ".join(rep.failures),
                            tuple(Witness(f) for f in rep.failures))

    runners = {
        "fano": check_fano,
        "reflexive": check_reflexive,
        "naive-integrality": check_naive,
        "log-positivity": check_log_positivity,
        "true-integrality": check_true,
        "delaygue-equivalence": check_equivalence,
        "rank1-conditions": check_rank1,
    }
    outcomes = tuple(runners[name]() for name in request.checks)
    ok = all(o.status != "fail" for o in outcomes)
    return CheckReport(
        label=request.label, config=cfg, precision=request.precision,
        ok=ok, outcomes=outcomes, d=d, k0_count=k0_count,
        dprime=tuple(dprime), cone_counts=tuple(cone_counts),
        warnings=tuple(warnings), elapsed=time.perf_counter() - start)


@dataclass(frozen=True)
class BatchResult:
    reports: tuple[CheckReport, ...]

    @property
    def passed(self) -> int:
        return sum(1 for r in self.reports if r.ok)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.reports if not r.ok and r.error is None)

    @property
    def invalid(self) -> int:
        return sum(1 for r in self.reports if r.error is not None)

    @property
    def ok(self) -> bool:
        return self.passed == len(self.reports)

    @property
    def summary_line(self) -> str:
        return "%d checked: %d passed, %d failed, %d invalid" % (
            len(self.reports), self.passed, self.failed, self.invalid)


def _guarded_run(request: CheckRequest) -> CheckReport:
    # batch items must stay independent, so internal errors become
    # error reports instead of tearing the pool down
    try:
        return run_check(request)
    except Exception as exc:
        return CheckReport(label=request.label, config=request.config,
                           precision=request.precision, ok=False,
                           error="internal error: %s" % exc)


def run_batch(requests, workers: int | None = None) -> BatchResult:
    """Run requests independently, reports in input order.

    workers > 1 fans out over a process pool; the default stays serial,
    which is also the deterministic-timing mode.
    """
    reqs = tuple(requests)
    if workers is not None and workers > 1 and len(reqs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = tuple(pool.map(_guarded_run, reqs))
    else:
        reports = tuple(_guarded_run(r) for r in reqs)
    return BatchResult(reports)


__all__ = [
    "CHECK_NAMES", "DEFAULT_CHECKS", "Witness", "CheckOutcome",
    "CheckRequest", "CheckReport", "BatchResult", "run_check", "run_batch",
]
