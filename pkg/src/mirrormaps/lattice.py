"""Vector families and their kernel lattices.

A configuration is a family of integer vectors v_ij grouped into p groups,
defining the lattice map Z^I -> Z^d that sends the (i,j)-th unit vector to
v_ij.  Slots are indexed row-major and 0-based: slot s corresponds to the
pair (i, j) with groups listed in order.

The kernel lattice K = ker(Z^I -> Z^d) is extracted with a saturated basis
(integer combinations of the basis rows give *every* integer kernel
vector), which is what makes downstream monoid enumeration exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg

Vector = tuple[int, ...]


class InvalidConfigError(ValueError):
    """A configuration failed validation; .reasons lists what failed."""

    def __init__(self, message: str, reasons: tuple[str, ...] = ()):
        super().__init__(message)
        self.reasons = reasons


@dataclass(frozen=True)
class VectorConfig:
    """Grouped family of integer vectors, all of the same dimension."""

    groups: tuple[tuple[Vector, ...], ...]

    def __post_init__(self):
        if not self.groups or any(not g for g in self.groups):
            raise InvalidConfigError("need at least one group and no empty groups")
        norm = tuple(tuple(tuple(int(x) for x in v) for v in g) for g in self.groups)
        object.__setattr__(self, "groups", norm)
        dim = len(norm[0][0])
        if dim == 0:
            raise InvalidConfigError("vectors must have positive dimension")
        for g in norm:
            for v in g:
                if len(v) != dim:
                    raise InvalidConfigError(
                        "vector %r has length %d, expected %d" % (v, len(v), dim))

    @classmethod
    def single_group(cls, vectors) -> "VectorConfig":
        return cls((tuple(tuple(v) for v in vectors),))

    @property
    def dim(self) -> int:
        return len(self.groups[0][0])

    @property
    def group_sizes(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.groups)

    @property
    def size(self) -> int:
        """Number of slots |I|."""
        return sum(self.group_sizes)

    @property
    def slots(self) -> tuple[tuple[int, int], ...]:
        """(group, position) pair for every slot, row-major."""
        return tuple((i, j) for i, g in enumerate(self.groups) for j in range(len(g)))

    @property
    def flat_vectors(self) -> tuple[Vector, ...]:
        return tuple(v for g in self.groups for v in g)

    def group_of_slot(self, slot: int) -> int:
        return self.slots[slot][0]

    def slot_of(self, i: int, j: int) -> int:
        return sum(self.group_sizes[:i]) + j

    def group_slots(self, i: int) -> range:
        start = sum(self.group_sizes[:i])
        return range(start, start + self.group_sizes[i])

    def matrix(self) -> list[list[int]]:
        """d x |I| matrix whose columns are the vectors."""
        flat = self.flat_vectors
        return [[v[c] for v in flat] for c in range(self.dim)]


@dataclass(frozen=True)
class KernelLattice:
    """Saturated basis of the kernel of a configuration's lattice map."""

    basis: tuple[Vector, ...]
    size: int

    @property
    def rank(self) -> int:
        return len(self.basis)

    def element(self, coords) -> Vector:
        """Integer combination sum coords[a] * basis[a]."""
        out = [0] * self.size
        for c, row in zip(coords, self.basis):
            if c:
                for s in range(self.size):
                    out[s] += c * row[s]
        return tuple(out)

    def coordinates(self, k) -> tuple[int, ...] | None:
        """Coordinates of an integer kernel vector, or None if outside."""
        if self.rank == 0:
            return () if all(x == 0 for x in k) else None
        cols = [[row[s] for row in self.basis] for s in range(self.size)]
        sol = linalg.solve_unique(cols, list(k))
        if sol is None or any(x.denominator != 1 for x in sol):
            return None
        return tuple(int(x) for x in sol)


def kernel_basis(config: VectorConfig) -> KernelLattice:
    basis = linalg.integer_kernel_basis(config.matrix())
    return KernelLattice(basis=tuple(basis), size=config.size)


def spans_full_lattice(config: VectorConfig) -> bool:
    """Do the vectors generate all of Z^d (not just a finite-index sublattice)?"""
    factors = linalg.invariant_factors(config.matrix())
    return len(factors) == config.dim and all(f == 1 for f in factors)


def has_positive_kernel_vector(config: VectorConfig) -> bool:
    """Is there a kernel vector with every slot strictly positive?

    Decided exactly: the kernel cone is rational, so a real solution of
    {k >= 1 entrywise} implies a rational one, which scales to an integer
    kernel vector with all entries >= 1.
    """
    kernel = kernel_basis(config)
    r = kernel.rank
    if r == 0:
        return False
    # -(c . basis)_s <= -1 for every slot s
    rows = []
    rhs = []
    for s in range(config.size):
        rows.append([-Fraction(row[s]) for row in kernel.basis])
        rhs.append(Fraction(-1))
    return linalg.feasible(rows, rhs, r)


@dataclass(frozen=True)
class ConfigValidation:
    spans_lattice: bool
    origin_interior: bool
    positive_kernel_vector: bool

    @property
    def ok(self) -> bool:
        return self.spans_lattice and self.origin_interior

    @property
    def reasons(self) -> tuple[str, ...]:
        out = []
        if not self.spans_lattice:
            out.append("vectors do not span the full lattice Z^d")
        if not self.origin_interior:
            out.append("origin is not interior to the summed polytope")
        return tuple(out)


def validate_config(config: VectorConfig) -> ConfigValidation:
    """Check the two standing hypotheses on a configuration.

    The origin-interior test (run on the relative interior, so it is
    meaningful even for degenerate input) and the positive-kernel-vector
    test are equivalent statements; both are computed independently and a
    disagreement aborts, since it would mean one of the two code paths is
    wrong.
    """
    from . import polytope  # local import; polytope pulls in this module

    spans = spans_full_lattice(config)
    delta = polytope.config_polytope(config)
    origin = (0,) * config.dim
    interior = polytope.in_relative_interior(delta, origin)
    positive = has_positive_kernel_vector(config)
    if interior != positive:
        raise RuntimeError(
            "internal bug: origin-interior (%s) and positive-kernel (%s) "
            "checks disagree" % (interior, positive))
    return ConfigValidation(
        spans_lattice=spans,
        origin_interior=interior,
        positive_kernel_vector=positive,
    )


def require_valid(config: VectorConfig) -> ConfigValidation:
    result = validate_config(config)
    if not result.ok:
        raise InvalidConfigError(
            "configuration fails validation: " + "; ".join(result.reasons),
            reasons=result.reasons)
    return result
