import random

import pytest

from bruteforce import brute_cone_sum, brute_negative_slot, brute_nonnegative
from mirrormaps.lattice import VectorConfig
from mirrormaps.maps import quintic_config
from mirrormaps.monoid import (WeightFunctional, cone_sum_elements,
                               free_monoid_basis, has_negative_slot_element,
                               has_nonzero_nonnegative, irreducible_elements,
                               negative_slot_elements, nonnegative_elements,
                               slot_bound_for_count, weight_bound_for_count)

PLANAR = VectorConfig.single_group([(0, 1), (1, 1), (0, -1), (-1, 1)])

FIXTURES = [
    quintic_config(),
    PLANAR,
    VectorConfig.single_group([(1,), (1,), (-1,)]),
    VectorConfig.single_group([(1,), (1,), (-1,), (-1,)]),
    VectorConfig.single_group([(1,), (-2,)]),
    VectorConfig.single_group([(1, 0), (0, 1), (-2, 1), (1, -2)]),
    VectorConfig.single_group([(-1, 0), (-1, 1), (1, -1), (1, 0)]),
    VectorConfig((((1, 0), (-1, 0)), ((0, 1), (0, -1)))),
]


def test_weight_functional():
    w = WeightFunctional.ones(3)
    assert w((1, 2, 3)) == 6
    ws = WeightFunctional.for_slot(4, 2)
    assert ws.coeffs == (2, 2, 1, 2)
    assert ws((1, 0, -2, 1)) == 2
    with pytest.raises(ValueError):
        WeightFunctional.for_slot(3, 3)


def test_nonnegative_elements_quintic():
    got = nonnegative_elements(quintic_config(), 20)
    assert got == [(n,) * 5 for n in range(5)]


def test_bound_edge_cases():
    cfg = quintic_config()
    assert nonnegative_elements(cfg, 0) == [(0,) * 5]
    assert nonnegative_elements(cfg, -1) == []
    assert nonnegative_elements(cfg, 4) == [(0,) * 5]
    rank0 = VectorConfig.single_group([(1, 0), (0, 1)])
    assert nonnegative_elements(rank0, 3) == [(0, 0)]
    assert negative_slot_elements(rank0, 0, 3) == []
    assert cone_sum_elements(rank0, 1, 3) == [(0, 0)]


def test_elements_sorted_by_weight_then_lex():
    for cfg in FIXTURES:
        elems = nonnegative_elements(cfg, 10)
        w = WeightFunctional.ones(cfg.size)
        assert elems == sorted(elems, key=lambda k: (w(k), k))


def test_enumeration_matches_bruteforce_fixtures():
    for cfg in FIXTURES:
        for bound in (0, 1, 5, 9):
            w = WeightFunctional.ones(cfg.size)
            assert nonnegative_elements(cfg, bound, w) \
                == brute_nonnegative(cfg, bound, w)
        for slot in range(cfg.size):
            ws = WeightFunctional.for_slot(cfg.size, slot)
            for bound in (0, 5, 9):
                assert negative_slot_elements(cfg, slot, bound, ws) \
                    == brute_negative_slot(cfg, slot, bound, ws)
                assert cone_sum_elements(cfg, slot, bound, ws) \
                    == brute_cone_sum(cfg, slot, bound, ws)


def test_enumeration_matches_bruteforce_random():
    rng = random.Random(30)
    cases = 0
    while cases < 25:
        dim = rng.randrange(1, 3)
        size = rng.randrange(2, 5)
        vs = [tuple(rng.randrange(-2, 3) for _ in range(dim))
              for _ in range(size)]
        if any(not any(v) for v in vs):
            continue
        cfg = VectorConfig.single_group(vs)
        cases += 1
        bound = rng.randrange(0, 8)
        w = WeightFunctional.ones(size)
        assert nonnegative_elements(cfg, bound, w) \
            == brute_nonnegative(cfg, bound, w)
        slot = rng.randrange(size)
        ws = WeightFunctional.for_slot(size, slot)
        assert negative_slot_elements(cfg, slot, bound, ws) \
            == brute_negative_slot(cfg, slot, bound, ws)
        assert cone_sum_elements(cfg, slot, bound, ws) \
            == brute_cone_sum(cfg, slot, bound, ws)


def test_planar_corrective_sets():
    # slot 0 holds the known corrective vector, all other slots are empty
    assert has_negative_slot_element(PLANAR, 0)
    for slot in (1, 2, 3):
        assert not has_negative_slot_element(PLANAR, slot)
    elems = negative_slot_elements(PLANAR, 0, 6)
    assert (-2, 1, 0, 1) in elems
    for k in elems:
        assert k[0] < 0
        assert all(x >= 0 for x in k[1:])
        assert sum(k) >= 0


def test_quintic_corrective_sets_empty():
    for slot in range(5):
        assert not has_negative_slot_element(quintic_config(), slot)
        assert negative_slot_elements(quintic_config(), slot, 30) == []


def test_has_nonzero_nonnegative():
    assert has_nonzero_nonnegative(quintic_config())
    assert has_nonzero_nonnegative(PLANAR)
    assert has_nonzero_nonnegative(VectorConfig.single_group([(1,), (-2,)]))
    assert not has_nonzero_nonnegative(
        VectorConfig.single_group([(1, 0), (0, 1)]))
    assert not has_nonzero_nonnegative(
        VectorConfig.single_group([(1, 0), (0, 1), (1, 1)]))


def test_weight_bound_for_count():
    cfg = quintic_config()
    assert weight_bound_for_count(cfg, 1) == 0
    assert weight_bound_for_count(cfg, 6) == 25
    d = weight_bound_for_count(PLANAR, 20)
    assert len(nonnegative_elements(PLANAR, d)) >= 20
    assert len(nonnegative_elements(PLANAR, d - 1)) < 20
    with pytest.raises(ValueError):
        weight_bound_for_count(VectorConfig.single_group([(1, 0), (0, 1)]), 2)


def test_slot_bound_for_count():
    cfg = quintic_config()
    for slot in range(5):
        assert slot_bound_for_count(cfg, slot, 6) == 45
    dp = slot_bound_for_count(PLANAR, 0, 20)
    n = len(cone_sum_elements(PLANAR, 0, dp))
    assert n >= 20
    assert len(cone_sum_elements(PLANAR, 0, dp - 1)) < 20
    with pytest.raises(ValueError):
        slot_bound_for_count(VectorConfig.single_group([(1, 0), (0, 1)]), 0, 2)


def test_slot_weight_strictly_positive_on_cone():
    # the slot-adapted functional must separate 0 from everything else
    for cfg in FIXTURES:
        for slot in range(cfg.size):
            w = WeightFunctional.for_slot(cfg.size, slot)
            for k in cone_sum_elements(cfg, slot, 12, w):
                if any(k):
                    assert w(k) > 0


def test_irreducible_elements():
    assert irreducible_elements(quintic_config(), 12) == [(1, 1, 1, 1, 1)]
    gens = irreducible_elements(PLANAR, 10)
    assert sorted(gens) == [(0, 1, 2, 1), (1, 0, 1, 0)]


def test_free_monoid_basis_fixtures():
    free = free_monoid_basis(quintic_config())
    assert free.is_free and free.generators == ((1, 1, 1, 1, 1),)

    two = free_monoid_basis(VectorConfig.single_group([(1,), (1,), (-1,)]))
    assert two.is_free and two.rank == 2
    assert sorted(two.generators) == [(0, 1, 1), (1, 0, 1)]

    planar = free_monoid_basis(PLANAR)
    assert planar.is_free
    assert sorted(planar.generators) == [(0, 1, 2, 1), (1, 0, 1, 0)]

    not_free_a = free_monoid_basis(
        VectorConfig.single_group([(1, 0), (0, 1), (-2, 1), (1, -2)]))
    assert not not_free_a.is_free and not_free_a.reason

    not_free_b = free_monoid_basis(
        VectorConfig.single_group([(1,), (1,), (-1,), (-1,)]))
    assert not not_free_b.is_free and "rays" in not_free_b.reason


def test_free_monoid_rank_zero():
    res = free_monoid_basis(VectorConfig.single_group([(1, 0), (0, 1)]))
    assert res.is_free and res.rank == 0


def test_free_generators_generate():
    for cfg in (quintic_config(), PLANAR):
        gens = free_monoid_basis(cfg).generators
        for k in nonnegative_elements(cfg, 12):
            assert _decomposable(k, gens)


def _decomposable(k, gens):
    if not any(k):
        return True
    for g in gens:
        if all(a >= b for a, b in zip(k, g)):
            if _decomposable(tuple(a - b for a, b in zip(k, g)), gens):
                return True
    return False
