"""Truncated multivariate series with exact rational coefficients.

A GradedSeries stores finitely many monomials, exponent tuples over a
fixed number of variables, graded by an integer weight functional and
truncated at a fixed weight bound.  All arithmetic is exact (Fraction
coefficients) and all operations discard weights above the bound.

Truncation contract: results are the exact truncations of the true
(untruncated) operations as long as every support exponent in sight
lies in a common cone on which the weight is nonnegative, zero only at
the origin.  The monoid enumerators produce exactly such supports.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .monoid import WeightFunctional

Key = tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a coefficient scan; offender is first in (weight, lex)."""

    ok: bool
    offender: Key | None = None
    coefficient: Fraction | None = None


class GradedSeries:
    """Weight-truncated series; do not mutate `terms` after construction."""

    __slots__ = ("weight", "bound", "terms")

    def __init__(self, weight: WeightFunctional, bound: int,
                 terms: dict[Key, Fraction] | None = None):
        self.weight = weight
        self.bound = int(bound)
        nvars = len(weight.coeffs)
        clean: dict[Key, Fraction] = {}
        for k, c in (terms or {}).items():
            if len(k) != nvars:
                raise ValueError("exponent %r has wrong arity" % (k,))
            c = Fraction(c)
            if c and weight(k) <= self.bound:
                clean[k] = c
        self.terms = clean

    # -- construction helpers ------------------------------------------

    @classmethod
    def zero(cls, weight: WeightFunctional, bound: int) -> "GradedSeries":
        return cls(weight, bound)

    @classmethod
    def constant(cls, weight: WeightFunctional, bound: int, value) -> "GradedSeries":
        key = (0,) * len(weight.coeffs)
        return cls(weight, bound, {key: Fraction(value)})

    @classmethod
    def monomial(cls, weight: WeightFunctional, bound: int, key: Key,
                 coeff=1) -> "GradedSeries":
        return cls(weight, bound, {tuple(key): Fraction(coeff)})

    # -- introspection --------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.weight.coeffs)

    def order_key(self, k: Key):
        return (self.weight(k), k)

    def items_sorted(self) -> list[tuple[Key, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: self.order_key(kv[0]))

    def coefficient(self, key) -> Fraction:
        return self.terms.get(tuple(key), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return (self.weight == other.weight and self.bound == other.bound
                and self.terms == other.terms)

    __hash__ = None

    def __repr__(self) -> str:
        head = self.items_sorted()[:4]
        body = ", ".join("%r: %s" % (k, c) for k, c in head)
        more = "" if len(self.terms) <= 4 else ", ... %d terms" % len(self.terms)
        return "GradedSeries(bound=%d, {%s%s})" % (self.bound, body, more)

    # -- ring operations -------------------------------------------------

    def _check_compatible(self, other: "GradedSeries") -> None:
        if self.weight != other.weight:
            raise ValueError("mixed weight functionals")

    def truncate(self, bound: int) -> "GradedSeries":
        if bound >= self.bound:
            return self
        return GradedSeries(self.weight, bound, self.terms)

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        self._check_compatible(other)
        bound = min(self.bound, other.bound)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return GradedSeries(self.weight, bound, out)

    def __sub__(self, other: "GradedSeries") -> "GradedSeries":
        return self + (-other)

    def __neg__(self) -> "GradedSeries":
        return GradedSeries(self.weight, self.bound,
                            {k: -c for k, c in self.terms.items()})

    def scaled(self, factor) -> "GradedSeries":
        f = Fraction(factor)
        return GradedSeries(self.weight, self.bound,
                            {k: c * f for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        self._check_compatible(other)
        bound = min(self.bound, other.bound)
        # iterate the other factor in weight order so the inner loop can stop
        rhs = other.items_sorted()
        out: dict[Key, Fraction] = {}
        for k1, c1 in self.terms.items():
            w1 = self.weight(k1)
            for k2, c2 in rhs:
                if w1 + self.weight(k2) > bound:
                    break
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return GradedSeries(self.weight, bound, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GradedSeries":
        if n < 0:
            raise ValueError("negative powers go through divide_by_unit")
        result = GradedSeries.constant(self.weight, self.bound, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- division, exp, log ----------------------------------------------

    def _zero_key(self) -> Key:
        return (0,) * self.nvars

    def divide_by_unit(self, den: "GradedSeries") -> "GradedSeries":
        """Long division by a series with invertible constant term.

        Every nonzero exponent of the denominator must have positive
        weight; the quotient coefficients are then determined by terms
        of strictly smaller weight and the minimal-term loop runs in
        (weight, lex) order via a lazy-deletion heap.
        """
        self._check_compatible(den)
        zero = self._zero_key()
        c0 = den.terms.get(zero)
        if not c0:
            raise ValueError("denominator has no constant term")
        bound = min(self.bound, den.bound)
        rest = []
        for k, c in den.items_sorted():
            if k == zero:
                continue
            if den.weight(k) <= 0:
                raise ValueError("denominator support must have positive weight")
            rest.append((k, den.weight(k), c))

        rem = {k: c for k, c in self.terms.items() if self.weight(k) <= bound}
        heap = [(self.weight(k), k) for k in rem]
        heapq.heapify(heap)
        quotient: dict[Key, Fraction] = {}
        while heap:
            w, k = heapq.heappop(heap)
            c = rem.pop(k, None)
            if c is None:
                continue  # stale entry, already cancelled
            coef = c / c0
            quotient[k] = coef
            for dk, dw, dc in rest:
                nw = w + dw
                if nw > bound:
                    break
                nk = tuple(a + b for a, b in zip(k, dk))
                old = rem.get(nk)
                new = (old or Fraction(0)) - coef * dc
                if new:
                    rem[nk] = new
                    if old is None:
                        heapq.heappush(heap, (nw, nk))
                else:
                    rem.pop(nk, None)
        return GradedSeries(self.weight, bound, quotient)

    def _require_positive_valuation(self, what: str) -> None:
        if self._zero_key() in self.terms:
            raise ValueError("%s needs a zero constant term" % what)
        if any(self.weight(k) <= 0 for k in self.terms):
            raise ValueError("%s needs positive-weight support" % what)

    def exp(self) -> "GradedSeries":
        self._require_positive_valuation("exponential")
        result = GradedSeries.constant(self.weight, self.bound, 1)
        term = result
        n = 1
        while True:
            term = (term * self).scaled(Fraction(1, n))
            if not term.terms:
                return result
            result = result + term
            n += 1

    def log(self) -> "GradedSeries":
        """Logarithm of a series with constant term exactly 1."""
        if self.terms.get(self._zero_key()) != 1:
            raise ValueError("logarithm needs constant term 1")
        s = self - GradedSeries.constant(self.weight, self.bound, 1)
        s._require_positive_valuation("logarithm")
        result = GradedSeries.zero(self.weight, self.bound)
        power = GradedSeries.constant(self.weight, self.bound, 1)
        n = 1
        while True:
            power = power * s
            if not power.terms:
                return result
            result = result + power.scaled(Fraction((-1) ** (n + 1), n))
            n += 1


def integrality_verdict(series: GradedSeries) -> Verdict:
    """First non-integer coefficient in (weight, lex) order, if any."""
    for k, c in series.items_sorted():
        if c.denominator != 1:
            return Verdict(False, k, c)
    return Verdict(True)


def nonnegativity_verdict(series: GradedSeries) -> Verdict:
    """First negative coefficient in (weight, lex) order, if any."""
    for k, c in series.items_sorted():
        if c < 0:
            return Verdict(False, k, c)
    return Verdict(True)


__all__ = ["GradedSeries", "Verdict", "integrality_verdict",
           "nonnegativity_verdict"]
