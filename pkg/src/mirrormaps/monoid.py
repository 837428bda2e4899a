"""Monoids of kernel vectors: enumeration, emptiness, freeness.

Two families of sets drive the series construction.  The nonnegative
monoid collects kernel vectors with all slots >= 0; a slot's corrective
set relaxes exactly that slot to be negative while its group sum stays
nonnegative.  Both are cut out of the kernel lattice by finitely many
halfspaces, so enumeration up to a weight bound reduces to the exact
integer-point walk in linalg.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .lattice import VectorConfig, kernel_basis

Element = tuple[int, ...]


@dataclass(frozen=True)
class WeightFunctional:
    """Integer linear functional on slot vectors, used to truncate sums."""

    coeffs: tuple[int, ...]

    def __call__(self, k: Sequence[int]) -> int:
        return sum(c * x for c, x in zip(self.coeffs, k))

    @classmethod
    def ones(cls, size: int) -> "WeightFunctional":
        return cls((1,) * size)

    @classmethod
    def for_slot(cls, size: int, slot: int) -> "WeightFunctional":
        """Weight 2 everywhere except 1 on the distinguished slot.

        Strictly positive on every nonzero vector that is nonnegative
        away from the slot and has nonnegative group sum: the group sum
        bounds the slot entry from below by minus the other entries.
        Truncating by this weight therefore always yields a finite set.
        """
        if not 0 <= slot < size:
            raise ValueError("slot %d out of range" % slot)
        coeffs = [2] * size
        coeffs[slot] = 1
        return cls(tuple(coeffs))


def _sorted_by_weight(elems: list[Element], weight: WeightFunctional) -> list[Element]:
    elems.sort(key=lambda k: (weight(k), k))
    return elems


def _slot_row(kl, s: int) -> list[int]:
    return [kl.basis[l][s] for l in range(kl.rank)]


def _weight_row(kl, weight: WeightFunctional) -> list[int]:
    return [weight(b) for b in kl.basis]


def nonnegative_elements(config: VectorConfig, bound: int,
                         weight: WeightFunctional | None = None) -> list[Element]:
    """Kernel vectors with every slot >= 0 and weight <= bound.

    Sorted by (weight, lex).  The zero vector is included whenever the
    bound is >= 0.
    """
    w = weight if weight is not None else WeightFunctional.ones(config.size)
    kl = kernel_basis(config)
    if kl.rank == 0:
        return [(0,) * config.size] if bound >= 0 else []
    rows = [[-x for x in _slot_row(kl, s)] for s in range(config.size)]
    rhs = [0] * config.size
    rows.append(_weight_row(kl, w))
    rhs.append(bound)
    coords = linalg.integer_points(rows, rhs, kl.rank)
    return _sorted_by_weight([kl.element(c) for c in coords], w)


def negative_slot_elements(config: VectorConfig, slot: int, bound: int,
                           weight: WeightFunctional | None = None) -> list[Element]:
    """Kernel vectors negative exactly at one slot, weight <= bound.

    Membership: the slot entry is < 0, every other slot is >= 0, and the
    sum over the slot's group is >= 0.  The default weight is the
    slot-adapted one, for which the truncated set is always finite; a
    custom weight may make the region unbounded, which raises
    UnboundedRegionError.
    """
    w = weight if weight is not None else WeightFunctional.for_slot(config.size, slot)
    group = config.group_of_slot(slot)
    kl = kernel_basis(config)
    if kl.rank == 0:
        return []
    rows = [_slot_row(kl, slot)]
    rhs = [-1]
    for s in range(config.size):
        if s != slot:
            rows.append([-x for x in _slot_row(kl, s)])
            rhs.append(0)
    group_row = [0] * kl.rank
    for s in config.group_slots(group):
        for l, x in enumerate(_slot_row(kl, s)):
            group_row[l] -= x
    rows.append(group_row)
    rhs.append(0)
    rows.append(_weight_row(kl, w))
    rhs.append(bound)
    coords = linalg.integer_points(rows, rhs, kl.rank)
    return _sorted_by_weight([kl.element(c) for c in coords], w)


def cone_sum_elements(config: VectorConfig, slot: int, bound: int,
                      weight: WeightFunctional | None = None) -> list[Element]:
    """Union of the nonnegative monoid and one slot's corrective set.

    These are exactly the kernel vectors nonnegative away from the slot
    with nonnegative group sum; sums of one element from each piece stay
    inside, which is what truncated series products need.
    """
    w = weight if weight is not None else WeightFunctional.for_slot(config.size, slot)
    group = config.group_of_slot(slot)
    kl = kernel_basis(config)
    if kl.rank == 0:
        return [(0,) * config.size] if bound >= 0 else []
    rows = []
    rhs = []
    for s in range(config.size):
        if s != slot:
            rows.append([-x for x in _slot_row(kl, s)])
            rhs.append(0)
    group_row = [0] * kl.rank
    for s in config.group_slots(group):
        for l, x in enumerate(_slot_row(kl, s)):
            group_row[l] -= x
    rows.append(group_row)
    rhs.append(0)
    rows.append(_weight_row(kl, w))
    rhs.append(bound)
    coords = linalg.integer_points(rows, rhs, kl.rank)
    return _sorted_by_weight([kl.element(c) for c in coords], w)


def has_nonzero_nonnegative(config: VectorConfig) -> bool:
    """Is there a nonzero kernel vector with all slots >= 0?

    Decided by rational feasibility: scaling a rational solution by a
    positive integer clears denominators without leaving the region.
    """
    kl = kernel_basis(config)
    if kl.rank == 0:
        return False
    rows = [[-x for x in _slot_row(kl, s)] for s in range(config.size)]
    rhs = [0] * config.size
    rows.append([-x for x in _weight_row(kl, WeightFunctional.ones(config.size))])
    rhs.append(-1)
    return linalg.feasible(rows, rhs, kl.rank)


def has_negative_slot_element(config: VectorConfig, slot: int) -> bool:
    """Is the slot's corrective set nonempty?  Exact, no weight bound."""
    group = config.group_of_slot(slot)
    kl = kernel_basis(config)
    if kl.rank == 0:
        return False
    rows = [_slot_row(kl, slot)]
    rhs = [-1]
    for s in range(config.size):
        if s != slot:
            rows.append([-x for x in _slot_row(kl, s)])
            rhs.append(0)
    group_row = [0] * kl.rank
    for s in config.group_slots(group):
        for l, x in enumerate(_slot_row(kl, s)):
            group_row[l] -= x
    rows.append(group_row)
    rhs.append(0)
    return linalg.feasible(rows, rhs, kl.rank)


def _search_bound(tally, count: int) -> int:
    # tally must be nondecreasing in d; doubling then bisection.
    hi = 1
    while tally(hi) < count:
        hi *= 2
    lo = 0 if tally(0) < count else -1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if tally(mid) >= count:
            hi = mid
        else:
            lo = mid
    return max(hi, 0)


def weight_bound_for_count(config: VectorConfig, count: int,
                           weight: WeightFunctional | None = None) -> int:
    """Least bound d >= 0 so that at least `count` nonnegative elements
    have weight <= d.

    Raises ValueError when the monoid is just the zero vector and the
    count can never be reached.
    """
    w = weight if weight is not None else WeightFunctional.ones(config.size)
    if count <= 1:
        return 0
    if not has_nonzero_nonnegative(config):
        raise ValueError(
            "only the zero vector is nonnegative; a count of %d is unreachable" % count)
    return _search_bound(lambda d: len(nonnegative_elements(config, d, w)), count)


def slot_bound_for_count(config: VectorConfig, slot: int, count: int,
                         weight: WeightFunctional | None = None) -> int:
    """Least bound d >= 0 so that the slot's summed cone holds at least
    `count` elements of weight <= d.

    The weight defaults to the slot-adapted functional, the one the
    correction-factor truncation is graded by.
    """
    w = weight if weight is not None else WeightFunctional.for_slot(config.size, slot)
    if count <= 1:
        return 0
    if not (has_nonzero_nonnegative(config)
            or has_negative_slot_element(config, slot)):
        raise ValueError(
            "the slot cone holds only the zero vector; a count of %d is unreachable" % count)
    return _search_bound(lambda d: len(cone_sum_elements(config, slot, d, w)), count)


def irreducible_elements(config: VectorConfig, bound: int) -> list[Element]:
    """Nonzero nonnegative vectors with no splitting into two nonzero
    nonnegative vectors, listed up to the plain coordinate-sum bound.

    Any part of a splitting has smaller coordinate sum, so the listing
    is complete below the bound.
    """
    elems = [k for k in nonnegative_elements(config, bound) if any(k)]
    out = []
    for k in elems:
        reducible = False
        for e in elems:
            if e == k:
                continue
            diff = tuple(a - b for a, b in zip(k, e))
            if all(x >= 0 for x in diff):
                reducible = True
                break
        if not reducible:
            out.append(k)
    return out


@dataclass(frozen=True)
class FreeMonoidResult:
    """Outcome of the freeness test for the nonnegative monoid."""

    is_free: bool
    generators: tuple[Element, ...]  # sorted by (coordinate sum, lex); empty if not free
    reason: str  # empty when free

    @property
    def rank(self) -> int:
        return len(self.generators)


def free_monoid_basis(config: VectorConfig) -> FreeMonoidResult:
    """Decide whether the nonnegative monoid is free on r generators.

    r is the kernel rank.  The monoid is the full set of lattice points
    of its rational cone, so freeness is equivalent to: the cone has
    exactly r extreme rays whose primitive generators form a basis of
    the kernel lattice.  Both parts are checked exactly.
    """
    kl = kernel_basis(config)
    r = kl.rank
    if r == 0:
        return FreeMonoidResult(True, (), "")
    ineqs = [_slot_row(kl, s) for s in range(config.size)]
    lin, rays = linalg.cone_description(ineqs, r)
    if lin:
        raise RuntimeError("internal bug: nonnegative cone contains a line")
    if len(rays) != r:
        return FreeMonoidResult(
            False, (),
            "nonnegative cone has %d extreme rays where the rank needs %d"
            % (len(rays), r))
    mat = [[ray[i] for ray in rays] for i in range(r)]
    det = linalg.abs_determinant(mat)
    if det == 0:
        return FreeMonoidResult(False, (), "extreme rays do not span the kernel")
    if det != 1:
        return FreeMonoidResult(
            False, (),
            "extreme ray generators span an index-%d sublattice" % det)
    gens = [kl.element(c) for c in rays]
    if any(x < 0 for g in gens for x in g):
        raise RuntimeError("internal bug: extreme ray left the nonnegative cone")
    gens.sort(key=lambda g: (sum(g), g))
    return FreeMonoidResult(True, tuple(gens), "")


__all__ = [
    "WeightFunctional", "nonnegative_elements", "negative_slot_elements",
    "cone_sum_elements", "has_nonzero_nonnegative", "has_negative_slot_element",
    "weight_bound_for_count", "slot_bound_for_count",
    "irreducible_elements", "FreeMonoidResult",
    "free_monoid_basis",
]
