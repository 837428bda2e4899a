from fractions import Fraction

import pytest

from mirrormaps.lattice import VectorConfig
from mirrormaps.maps import (collapse_to_generator, correction_factor,
                             correction_series, log_period, log_ratio,
                             naive_mirror_map, period_factor,
                             principal_period, quintic_config,
                             quintic_q_series, true_mirror_map)
from mirrormaps.monoid import WeightFunctional
from mirrormaps.series import GradedSeries

PLANAR = VectorConfig.single_group([(0, 1), (1, 1), (0, -1), (-1, 1)])
GEN5 = (1, 1, 1, 1, 1)


def univariate(series, generator, upto):
    one_var = collapse_to_generator(series, generator)
    return [one_var.coefficient((m,)) for m in range(upto + 1)]


def test_period_factor():
    cfg = quintic_config()
    assert period_factor(cfg, (0, 0, 0, 0, 0)) == 1
    assert period_factor(cfg, GEN5) == 120
    assert period_factor(cfg, (2, 2, 2, 2, 2)) == 113400
    grouped = VectorConfig((((1, 0), (-1, 0)), ((0, 1), (0, -1))))
    assert period_factor(grouped, (1, 1, 2, 2)) == 2 * 6


def test_quintic_principal_period():
    phi0 = principal_period(quintic_config(), 20)
    assert univariate(phi0, GEN5, 4) \
        == [1, 120, 113400, 168168000, 305540235000]


def test_quintic_log_period():
    phi = log_period(quintic_config(), 0, 10)
    assert phi.coefficient((0,) * 5) == 0
    assert phi.coefficient(GEN5) == 154
    # order-2 value pinned by phi = phi0 * ratio: 120*154 + 143565
    assert phi.coefficient((2,) * 5) == 162045


def test_quintic_log_ratio():
    ratio = log_ratio(quintic_config(), 0, 20)
    assert univariate(ratio, GEN5, 4) == [
        0, 154, 143565, Fraction(645061600, 3), Fraction(789462914125, 2)]


def test_quintic_naive_map():
    psi = naive_mirror_map(quintic_config(), 0, 20)
    assert univariate(psi, GEN5, 4) \
        == [1, 154, 155423, 237738254, 439875902939]


def test_quintic_slots_agree():
    # the five slots play symmetric roles
    a = naive_mirror_map(quintic_config(), 0, 10)
    b = naive_mirror_map(quintic_config(), 3, 10)
    assert a == b


def test_quintic_correction_vanishes():
    cfg = quintic_config()
    w = WeightFunctional.for_slot(5, 0)
    assert correction_series(cfg, 0, 18).terms == {}
    assert correction_factor(cfg, 0, 18) == GradedSeries.constant(w, 18, 1)
    true = true_mirror_map(cfg, 0, 18)
    assert true == naive_mirror_map(cfg, 0, 18, w)


def test_planar_correction_coefficient():
    tau = correction_series(PLANAR, 0, 8)
    assert tau.coefficient((-2, 1, 0, 1)) == -1
    true = true_mirror_map(PLANAR, 0, 8)
    assert true.coefficient((-2, 1, 0, 1)) == -1


def test_true_map_routes_agree():
    for cfg, slot in ((PLANAR, 0), (PLANAR, 2), (quintic_config(), 1)):
        assert true_mirror_map(cfg, slot, 12) \
            == true_mirror_map(cfg, slot, 12, direct=True)


def test_true_map_factors():
    w = WeightFunctional.for_slot(4, 0)
    naive = naive_mirror_map(PLANAR, 0, 10, w)
    factor = correction_factor(PLANAR, 0, 10, w)
    assert true_mirror_map(PLANAR, 0, 10) == naive * factor


def test_collapse_to_generator():
    w = WeightFunctional.ones(2)
    s = GradedSeries(w, 14, {(0, 0): 1, (2, 4): 5, (4, 8): Fraction(1, 3)})
    c = collapse_to_generator(s, (2, 4))
    assert [c.coefficient((m,)) for m in range(3)] == [1, 5, Fraction(1, 3)]
    assert c.weight.coeffs == (6,)
    with pytest.raises(ValueError):
        collapse_to_generator(GradedSeries(w, 8, {(1, 1): 1}), (2, 4))
    with pytest.raises(ValueError):
        collapse_to_generator(s, (0, 0))


def test_quintic_q_series():
    q = quintic_q_series(20)
    assert [q.coefficient((n,)) for n in (5, 10, 15, 20)] \
        == [1, 770, 1014275, 1703916750]
    assert all(q.coefficient((n,)) == 0 for n in range(20) if n % 5)
    assert quintic_q_series(4).terms == {}
    assert quintic_q_series(0).terms == {}
