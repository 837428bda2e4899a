import random
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from mirrormaps import linalg


def random_matrix(rng, rows, cols, span=4):
    return [[rng.randrange(-span, span + 1) for _ in range(cols)]
            for _ in range(rows)]


def test_matmul_against_numpy():
    rng = random.Random(1)
    for _ in range(30):
        a = random_matrix(rng, rng.randrange(1, 4), rng.randrange(1, 4))
        b = random_matrix(rng, len(a[0]), rng.randrange(1, 4))
        got = linalg.matmul(a, b)
        want = (np.array(a) @ np.array(b)).tolist()
        assert [list(r) for r in got] == want


def test_integer_diagonalization_reconstructs():
    rng = random.Random(2)
    for _ in range(50):
        mat = random_matrix(rng, rng.randrange(1, 5), rng.randrange(1, 5))
        d, s, t = linalg.integer_diagonalization(mat)
        assert linalg.abs_determinant(s) == 1
        assert linalg.abs_determinant(t) == 1
        assert [list(r) for r in linalg.matmul(linalg.matmul(s, mat), t)] \
            == [list(r) for r in d]
        for i, row in enumerate(d):
            for j, x in enumerate(row):
                if i != j:
                    assert x == 0


def test_invariant_factors_known():
    assert linalg.invariant_factors([[1, 0], [0, 1]]) == [1, 1]
    assert linalg.invariant_factors([[2, 0], [0, 3]]) == [1, 6]
    assert linalg.invariant_factors([[2, 0], [0, 2]]) == [2, 2]
    assert linalg.invariant_factors([[4, 6]]) == [2]
    assert linalg.invariant_factors([[0, 0], [0, 0]]) == []


def test_invariant_factors_divisibility_chain():
    rng = random.Random(3)
    for _ in range(40):
        mat = random_matrix(rng, rng.randrange(1, 5), rng.randrange(1, 5))
        fs = linalg.invariant_factors(mat)
        assert all(f > 0 for f in fs)
        for a, b in zip(fs, fs[1:]):
            assert b % a == 0


def same_saturated_lattice(basis1, basis2) -> bool:
    if len(basis1) != len(basis2):
        return False
    if not basis1:
        return True
    cols1 = [[row[s] for row in basis1] for s in range(len(basis1[0]))]
    cols2 = [[row[s] for row in basis2] for s in range(len(basis2[0]))]
    for v in basis2:
        sol = linalg.solve_unique(cols1, list(v))
        if sol is None or any(x.denominator != 1 for x in sol):
            return False
    for v in basis1:
        sol = linalg.solve_unique(cols2, list(v))
        if sol is None or any(x.denominator != 1 for x in sol):
            return False
    return True


def test_integer_kernel_basis_properties():
    rng = random.Random(4)
    for _ in range(50):
        rows, cols = rng.randrange(1, 4), rng.randrange(1, 5)
        mat = random_matrix(rng, rows, cols)
        basis = linalg.integer_kernel_basis(mat)
        for v in basis:
            assert all(sum(r[j] * v[j] for j in range(cols)) == 0
                       for r in mat)
        assert len(basis) == cols - linalg.rational_rank(mat)
        if basis:
            # saturated: the basis extends to a basis of the full lattice
            assert linalg.invariant_factors(list(basis)) == [1] * len(basis)


def test_integer_kernel_basis_saturation_fixture():
    basis = linalg.integer_kernel_basis([[2, 4]])
    assert same_saturated_lattice(basis, [(2, -1)])
    basis5 = linalg.integer_kernel_basis(
        [[1, 0, 0, 0, -1],
         [0, 1, 0, 0, -1],
         [0, 0, 1, 0, -1],
         [0, 0, 0, 1, -1]])
    assert same_saturated_lattice(basis5, [(1, 1, 1, 1, 1)])


def test_abs_determinant():
    assert linalg.abs_determinant([[2, 0], [0, 3]]) == 6
    assert linalg.abs_determinant([[0, 1], [1, 0]]) == 1
    assert linalg.abs_determinant([[2, 1], [4, 2]]) == 0
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randrange(1, 4)
        a = random_matrix(rng, n, n)
        b = random_matrix(rng, n, n)
        assert linalg.abs_determinant(linalg.matmul(a, b)) \
            == linalg.abs_determinant(a) * linalg.abs_determinant(b)


def test_rational_rank_against_numpy():
    rng = random.Random(6)
    for _ in range(50):
        mat = random_matrix(rng, rng.randrange(1, 5), rng.randrange(1, 5),
                            span=3)
        assert linalg.rational_rank(mat) == np.linalg.matrix_rank(np.array(mat))


def test_solve_unique():
    # unique rational solution
    sol = linalg.solve_unique([[2, 0], [0, 4]], [1, 2])
    assert sol == (Fraction(1, 2), Fraction(1, 2))
    # rank-deficient columns: uniqueness is part of the contract
    with pytest.raises(ValueError):
        linalg.solve_unique([[1, 1]], [3])
    # inconsistent
    assert linalg.solve_unique([[1], [1]], [0, 1]) is None
    rng = random.Random(7)
    done = 0
    while done < 30:
        n = rng.randrange(1, 4)
        a = random_matrix(rng, n, n)
        if linalg.abs_determinant(a) == 0:
            continue
        x = [Fraction(rng.randrange(-9, 10), rng.randrange(1, 5))
             for _ in range(n)]
        b = [sum(Fraction(a[i][j]) * x[j] for j in range(n)) for i in range(n)]
        assert linalg.solve_unique(a, b) == tuple(x)
        done += 1


def test_primitive_vector():
    assert linalg.primitive_vector((4, -6)) == (2, -3)
    assert linalg.primitive_vector((0, 5)) == (0, 1)
    assert linalg.primitive_vector((3,)) == (1,)
    assert linalg.primitive_vector((1, 1)) == (1, 1)


def test_span_coordinates_preserves_relations_and_spans():
    rng = random.Random(8)
    for _ in range(40):
        rows = random_matrix(rng, rng.randrange(1, 5), rng.randrange(1, 4))
        coords = linalg.span_coordinates(rows)
        assert len(coords) == len(rows)
        r = linalg.rational_rank(rows)
        assert all(len(c) == r for c in coords)
        if r:
            # new vectors span the full small lattice
            assert linalg.invariant_factors(coords)[-1:] in ([], [1]) \
                and linalg.rational_rank(coords) == r
            assert linalg.invariant_factors(coords) == [1] * r
        # identical integer linear relations among old and new rows
        old_rel = linalg.integer_kernel_basis(
            [[row[i] for row in rows] for i in range(len(rows[0]))])
        new_rel = linalg.integer_kernel_basis(
            [[c[i] for c in coords] for i in range(r)]) if r else \
            linalg.integer_kernel_basis([[0] * len(rows)])
        assert same_saturated_lattice(list(old_rel), list(new_rel))


def test_span_coordinates_fixture():
    # index-4 sublattice of the plane
    coords = linalg.span_coordinates([[2, 0], [0, 2]])
    assert linalg.abs_determinant(coords) == 1
    # rank-1 family keeps its ratios
    coords = linalg.span_coordinates([[2, 2], [4, 4], [-2, -2]])
    (a,), (b,), (c,) = coords
    assert (b, c) == (2 * a, -a) and abs(a) == 1


def test_cone_description_quadrant():
    lin, rays = linalg.cone_description([[1, 0], [0, 1]], 2)
    assert lin == []
    assert sorted(rays) == [(0, 1), (1, 0)]


def test_cone_description_halfplane_and_line():
    lin, rays = linalg.cone_description([[1, 0]], 2)
    assert len(lin) == 1 and lin[0][0] == 0 and abs(lin[0][1]) == 1
    assert len(rays) == 1 and rays[0][1] == 0 and rays[0][0] > 0
    lin, rays = linalg.cone_description([[1, 0], [-1, 0]], 2)
    assert len(lin) == 1 and rays == []


def test_cone_description_random_soundness():
    # every reported ray and lineality vector must satisfy the system
    rng = random.Random(9)
    for _ in range(40):
        n = rng.randrange(1, 4)
        ineqs = [tuple(rng.randrange(-2, 3) for _ in range(n))
                 for _ in range(rng.randrange(1, 5))]
        lin, rays = linalg.cone_description(ineqs, n)
        for v in lin:
            assert all(sum(a * b for a, b in zip(h, v)) == 0 for h in ineqs)
        for v in rays:
            assert any(v)
            assert all(sum(a * b for a, b in zip(h, v)) >= 0 for h in ineqs)


def test_feasible():
    assert linalg.feasible([[1], [-1]], [1, 1], 1)          # -1 <= x <= 1
    assert not linalg.feasible([[1], [-1]], [0, -1], 1)     # x <= 0, x >= 1
    assert linalg.feasible([[0]], [0], 1)
    assert not linalg.feasible([[0]], [-1], 1)


def test_integer_points_box():
    pts = linalg.integer_points([[1], [-1]], [3, 0], 1)
    assert pts == [(0,), (1,), (2,), (3,)]
    assert linalg.integer_points([[1], [-1]], [-1, 0], 1) == []


def test_integer_points_unbounded_raises():
    with pytest.raises(linalg.UnboundedRegionError):
        linalg.integer_points([[-1]], [0], 1)
    with pytest.raises(linalg.UnboundedRegionError):
        linalg.integer_points([[-1, 0], [0, -1]], [0, 0], 2)


def test_integer_points_against_bruteforce():
    rng = random.Random(10)
    for _ in range(40):
        n = rng.randrange(1, 4)
        rows = [[rng.randrange(-3, 4) for _ in range(n)]
                for _ in range(rng.randrange(0, 4))]
        rhs = [rng.randrange(-2, 7) for _ in rows]
        for i in range(n):  # bounding box keeps the region finite
            for sign in (1, -1):
                rows.append([sign if j == i else 0 for j in range(n)])
                rhs.append(4)
        got = linalg.integer_points(rows, rhs, n)
        want = [p for p in product(range(-4, 5), repeat=n)
                if all(sum(r[j] * p[j] for j in range(n)) <= b
                       for r, b in zip(rows, rhs))]
        assert got == sorted(want)
