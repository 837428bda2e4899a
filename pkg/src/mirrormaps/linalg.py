"""Exact linear algebra over the integers and rationals.

Everything here works on plain Python ints and fractions.Fraction; no
floating point is used anywhere.  The three tool families are

  * integer diagonalization (Smith-style, without the divisibility chain)
    with tracked unimodular row/column operations, used for saturated
    kernel bases and for the lattice-spanning test,
  * Gaussian elimination over the rationals (rank, unique solve),
  * Fourier-Motzkin elimination for rational halfspace systems, used both
    as an exact feasibility test and as a cascade that enumerates all
    integer points of a bounded rational polyhedron.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

IntMatrix = list[list[int]]

# A linear constraint sum(coeffs[i] * x[i]) <= rhs, coefficients integer
# after normalization.
Constraint = tuple[tuple[Fraction, ...], Fraction]


class UnboundedRegionError(ValueError):
    """The region handed to the integer-point walk is unbounded."""


def identity_matrix(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            aik = ai[k]
            if aik == 0:
                continue
            bk = b[k]
            oi = out[i]
            for j in range(cols):
                oi[j] += aik * bk[j]
    return out


def integer_diagonalization(mat: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns (d, s, t) with s @ mat @ t == d, where s and t are unimodular
    and d is diagonal.  Like Smith normal form except the diagonal is not
    forced into a divisibility chain; kernels and the all-units test only
    need the diagonal shape.
    """
    a = [list(map(int, row)) for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    s = identity_matrix(m)
    t = identity_matrix(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        s[i], s[j] = s[j], s[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in t:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        # row[dst] += c * row[src]
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        s[dst] = [x + c * y for x, y in zip(s[dst], s[src])]

    def add_col(src, dst, c):
        for row in a:
            row[dst] += c * row[src]
        for row in t:
            row[dst] += c * row[src]

    for p in range(min(m, n)):
        while True:
            # smallest nonzero entry in the trailing block becomes the pivot
            best = None
            for i in range(p, m):
                for j in range(p, n):
                    v = abs(a[i][j])
                    if v and (best is None or v < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return a, s, t
            bi, bj = best
            if bi != p:
                swap_rows(p, bi)
            if bj != p:
                swap_cols(p, bj)
            pivot = a[p][p]
            done = True
            for i in range(p + 1, m):
                if a[i][p]:
                    q = a[i][p] // pivot
                    add_row(p, i, -q)
                    if a[i][p]:
                        done = False
            for j in range(p + 1, n):
                if a[p][j]:
                    q = a[p][j] // pivot
                    add_col(p, j, -q)
                    if a[p][j]:
                        done = False
            if done:
                break
        if a[p][p] < 0:
            # flip the sign via a row scale of -1 (unimodular)
            a[p] = [-x for x in a[p]]
            s[p] = [-x for x in s[p]]
    return a, s, t


def integer_kernel_basis(mat: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Saturated basis of {x in Z^n : mat @ x = 0}.

    The basis rows generate the full kernel sublattice (every integer
    kernel vector is an integer combination), because they are columns of
    a unimodular matrix.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    if n == 0:
        return []
    d, _, t = integer_diagonalization(mat)
    basis = []
    for j in range(n):
        diag = d[j][j] if j < min(m, n) else 0
        if diag == 0:
            basis.append(tuple(t[i][j] for i in range(n)))
    return basis


def abs_determinant(mat: Sequence[Sequence[int]]) -> int:
    """|det| of a square integer matrix, via the diagonalization."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    d, _, _ = integer_diagonalization(mat)
    out = 1
    for i in range(n):
        out *= abs(d[i][i])
    return out


def invariant_factors(mat: Sequence[Sequence[int]]) -> list[int]:
    """Smith invariant factors: positive, each dividing the next.

    The diagonalization above keeps elementary divisors unordered, so the
    diagonal is normalized pairwise; gcd/lcm on a pair is unimodular
    (diag(a, b) ~ diag(gcd, lcm)) and sorts the valuations at every
    prime at once.
    """
    d, _, _ = integer_diagonalization(mat)
    out = []
    for j in range(min(len(d), len(d[0]) if d else 0)):
        if d[j][j]:
            out.append(abs(d[j][j]))
    for i in range(len(out)):
        for j in range(i + 1, len(out)):
            g = math.gcd(out[i], out[j])
            out[i], out[j] = g, out[i] // g * out[j]
    return out


def span_coordinates(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Rewrite integer row vectors in a basis of the lattice they generate.

    The rewritten rows span the full lattice Z^r, r the rational rank,
    and satisfy exactly the same integer linear relations as the input
    (s @ mat @ t = d gives mat = s^-1 @ d @ t^-1, so the rows of
    d @ t^-1 with nonzero diagonal are a basis of the row lattice and
    the first r columns of s^-1 are the coordinates; x @ mat = 0 iff
    the first r entries of x @ s^-1 vanish).
    """
    mat = [list(r) for r in rows]
    if not mat:
        return []
    d, s, _ = integer_diagonalization(mat)
    rank = sum(1 for j in range(min(len(d), len(d[0]))) if d[j][j])
    n = len(mat)
    cols = []
    for j in range(rank):
        unit = [Fraction(int(i == j)) for i in range(n)]
        col = solve_unique(s, unit)
        if col is None:
            raise RuntimeError("row-operation matrix must be invertible")
        cols.append(col)
    out = []
    for i in range(n):
        entries = [cols[j][i] for j in range(rank)]
        assert all(e.denominator == 1 for e in entries)
        out.append(tuple(int(e) for e in entries))
    return out


def rational_rank(rows: Iterable[Sequence[Fraction | int]]) -> int:
    work = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    col = 0
    while rank < len(work) and col < ncols:
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            col += 1
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[rank])]
        rank += 1
        col += 1
    return rank


def solve_unique(rows: Sequence[Sequence[Fraction | int]],
                 rhs: Sequence[Fraction | int]) -> tuple[Fraction, ...] | None:
    """Solve rows @ x = rhs when the columns are independent.

    Returns None when the system is inconsistent.  Raises ValueError when
    the solution is not unique (rank-deficient columns), since callers
    rely on uniqueness.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    work = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    pivots: list[int] = []
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, m) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for r in range(m):
            if r != rank and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[rank])]
        pivots.append(col)
        rank += 1
    if rank < n:
        raise ValueError("system does not have a unique solution")
    for r in range(rank, m):
        if work[r][n]:
            return None
    sol = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        sol[col] = work[r][n]
    return tuple(sol)


def primitive_vector(v: Sequence[int]) -> tuple[int, ...]:
    g = math.gcd(*(abs(x) for x in v))
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


def cone_description(ineqs: Sequence[Sequence[int]], ndims: int
                     ) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Double description of the cone {w in R^ndims : h . w >= 0 for h in ineqs}.

    Returns (lineality, rays): a lattice basis of the largest linear
    subspace inside the cone, and the extreme rays modulo that subspace,
    all as primitive integer vectors.  Incremental insertion: a cutting
    hyperplane either splits off one lineality generator or combines
    adjacent positive/negative ray pairs, with adjacency decided by
    zero-set inclusion over the inequalities processed so far.
    """
    def dot(u, v):
        return sum(a * b for a, b in zip(u, v))

    lineality = [tuple(1 if i == j else 0 for j in range(ndims))
                 for i in range(ndims)]
    rays: list[tuple[tuple[int, ...], int]] = []  # (vector, zero-set bitmask)
    for idx, h in enumerate(ineqs):
        values = [dot(h, l) for l in lineality]
        pivot = next((t for t, v in enumerate(values) if v), None)
        if pivot is not None:
            z = lineality[pivot]
            hz = values[pivot]
            if hz < 0:
                z = tuple(-x for x in z)
                hz = -hz
            new_lineality = []
            for t, l in enumerate(lineality):
                if t == pivot:
                    continue
                proj = tuple(hz * a - values[t] * b for a, b in zip(l, z))
                new_lineality.append(primitive_vector(proj))
            new_rays = []
            for r, zs in rays:
                hr = dot(h, r)
                proj = tuple(hz * a - hr * b for a, b in zip(r, z))
                new_rays.append((primitive_vector(proj), zs | (1 << idx)))
            # z satisfied every earlier inequality with equality
            new_rays.append((z, (1 << idx) - 1))
            lineality = new_lineality
            rays = new_rays
            continue
        plus, zero, minus = [], [], []
        for r, zs in rays:
            hr = dot(h, r)
            if hr > 0:
                plus.append((r, zs))
            elif hr < 0:
                minus.append((r, zs))
            else:
                zero.append((r, zs | (1 << idx)))
        new_rays = plus + zero
        for rp, zp in plus:
            for rn, zn in minus:
                common = zp & zn
                adjacent = True
                for r3, z3 in rays:
                    if r3 is rp or r3 is rn:
                        continue
                    if common & z3 == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                hp, hn = dot(h, rp), dot(h, rn)
                comb = tuple(hp * a - hn * b for a, b in zip(rn, rp))
                new_rays.append((primitive_vector(comb), (common | (1 << idx))))
        rays = new_rays
    return lineality, [r for r, _ in rays]


def _normalize_constraint(coeffs: Sequence[Fraction], rhs: Fraction) -> Constraint | None:
    """Scale to primitive integer form; None for a tautology 0 <= rhs>=0."""
    denom = math.lcm(*(c.denominator for c in coeffs), rhs.denominator)
    ints = [int(c * denom) for c in coeffs]
    r = int(rhs * denom)
    g = math.gcd(*(abs(x) for x in ints), abs(r))
    if g > 1:
        ints = [x // g for x in ints]
        r //= g
    if all(x == 0 for x in ints) and r >= 0:
        return None
    return tuple(Fraction(x) for x in ints), Fraction(r)


def make_constraints(rows: Sequence[Sequence[Fraction | int]],
                     rhs: Sequence[Fraction | int]) -> list[Constraint]:
    """Build the system rows @ x <= rhs, dropping tautologies."""
    out = []
    seen = set()
    for row, b in zip(rows, rhs):
        c = _normalize_constraint([Fraction(x) for x in row], Fraction(b))
        if c is not None and c not in seen:
            seen.add(c)
            out.append(c)
    return out


def _eliminate_variable(cons: list[Constraint], var: int) -> list[Constraint]:
    pos = [c for c in cons if c[0][var] > 0]
    neg = [c for c in cons if c[0][var] < 0]
    rest = [c for c in cons if c[0][var] == 0]
    out = list(rest)
    seen = set(rest)
    for (pa, pb) in pos:
        for (na, nb) in neg:
            # (-na[var]) * p + pa[var] * n cancels x[var]
            cp, cn = -na[var], pa[var]
            coeffs = [cp * x + cn * y for x, y in zip(pa, na)]
            norm = _normalize_constraint(coeffs, cp * pb + cn * nb)
            if norm is not None and norm not in seen:
                seen.add(norm)
                out.append(norm)
    return out


def feasible(rows: Sequence[Sequence[Fraction | int]],
             rhs: Sequence[Fraction | int],
             nvars: int) -> bool:
    """Exact feasibility of {x in R^nvars : rows @ x <= rhs}."""
    cons = make_constraints(rows, rhs)
    for var in range(nvars - 1, -1, -1):
        cons = _eliminate_variable(cons, var)
    # all variables gone: only constant constraints 0 <= rhs remain
    return all(b >= 0 for _, b in cons)


def integer_points(rows: Sequence[Sequence[Fraction | int]],
                   rhs: Sequence[Fraction | int],
                   nvars: int) -> list[tuple[int, ...]]:
    """All integer points of the bounded region rows @ x <= rhs.

    Runs a Fourier-Motzkin cascade once, then walks variables in order,
    bounding each from the projected system.  Output is in lexicographic
    order.  Raises UnboundedRegionError when some variable has no upper
    or no lower bound (the region is a cone direction).
    """
    if nvars == 0:
        return [()] if all(Fraction(b) >= 0 for b in rhs) else []
    systems: list[list[Constraint]] = [[] for _ in range(nvars + 1)]
    systems[nvars] = make_constraints(rows, rhs)
    for var in range(nvars - 1, 0, -1):
        systems[var] = _eliminate_variable(systems[var + 1], var)
    for _, b in _eliminate_variable(systems[1], 0):
        if b < 0:
            return []

    points: list[tuple[int, ...]] = []

    def walk(depth: int, prefix: list[int]) -> None:
        lo: Fraction | None = None
        hi: Fraction | None = None
        for coeffs, b in systems[depth + 1]:
            c = coeffs[depth]
            residual = b - sum(coeffs[i] * prefix[i] for i in range(depth))
            if c > 0:
                bound = residual / c
                if hi is None or bound < hi:
                    hi = bound
            elif c < 0:
                bound = residual / c
                if lo is None or bound > lo:
                    lo = bound
            elif residual < 0:
                return
        if lo is None or hi is None:
            raise UnboundedRegionError(
                "region is unbounded in variable %d" % depth)
        first = math.ceil(lo)
        last = math.floor(hi)
        for v in range(first, last + 1):
            prefix.append(v)
            if depth + 1 == nvars:
                points.append(tuple(prefix))
            else:
                walk(depth + 1, prefix)
            prefix.pop()

    walk(0, [])
    return points
