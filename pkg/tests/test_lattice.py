import pytest

from mirrormaps.lattice import (InvalidConfigError, VectorConfig,
                                has_positive_kernel_vector, kernel_basis,
                                require_valid, spans_full_lattice,
                                validate_config)
from mirrormaps.maps import quintic_config

PLANAR = VectorConfig.single_group([(0, 1), (1, 1), (0, -1), (-1, 1)])


def test_construction_normalizes_to_tuples():
    cfg = VectorConfig(([[1, 0], [0, 1]], [[-1, -1]]))
    assert cfg.groups == (((1, 0), (0, 1)), ((-1, -1),))
    assert cfg.dim == 2
    assert cfg.size == 3
    assert cfg.group_sizes == (2, 1)


def test_construction_rejects_bad_shapes():
    with pytest.raises(InvalidConfigError):
        VectorConfig(())
    with pytest.raises(InvalidConfigError):
        VectorConfig((((1,),), ()))
    with pytest.raises(InvalidConfigError):
        VectorConfig.single_group([()])
    with pytest.raises(InvalidConfigError):
        VectorConfig.single_group([(1, 0), (1,)])


def test_slot_bookkeeping():
    cfg = VectorConfig((((1, 0),), ((0, 1), (-1, -1)), ((1, 1),)))
    assert cfg.slots == ((0, 0), (1, 0), (1, 1), (2, 0))
    for s, (i, j) in enumerate(cfg.slots):
        assert cfg.slot_of(i, j) == s
        assert cfg.group_of_slot(s) == i
    assert list(cfg.group_slots(1)) == [1, 2]
    assert cfg.flat_vectors == ((1, 0), (0, 1), (-1, -1), (1, 1))


def test_matrix_columns_are_vectors():
    cfg = PLANAR
    mat = cfg.matrix()
    assert len(mat) == 2 and len(mat[0]) == 4
    for s, v in enumerate(cfg.flat_vectors):
        assert (mat[0][s], mat[1][s]) == v


def test_kernel_basis_quintic():
    kl = kernel_basis(quintic_config())
    assert kl.rank == 1
    gen = kl.basis[0]
    assert gen in ((1, 1, 1, 1, 1), (-1, -1, -1, -1, -1))
    assert kl.coordinates((3, 3, 3, 3, 3)) in ((3,), (-3,))
    assert kl.coordinates((1, 0, 0, 0, 0)) is None
    assert kl.element((2,)) in ((2,) * 5, (-2,) * 5)


def test_kernel_basis_planar_example():
    kl = kernel_basis(PLANAR)
    assert kl.rank == 2
    for b in kl.basis:
        assert sum(x * v[0] for x, v in zip(b, PLANAR.flat_vectors)) == 0
        assert sum(x * v[1] for x, v in zip(b, PLANAR.flat_vectors)) == 0
    assert kl.coordinates((-2, 1, 0, 1)) is not None


def test_kernel_rank_zero():
    cfg = VectorConfig.single_group([(1, 0), (0, 1)])
    kl = kernel_basis(cfg)
    assert kl.rank == 0
    assert kl.coordinates((0, 0)) == ()
    assert kl.coordinates((1, 0)) is None


def test_spans_full_lattice():
    assert spans_full_lattice(quintic_config())
    assert spans_full_lattice(PLANAR)
    assert not spans_full_lattice(VectorConfig.single_group([(2,), (-2,)]))
    assert not spans_full_lattice(
        VectorConfig.single_group([(-1, -1), (-1, 1), (1, -1), (1, 1)]))


def test_positive_kernel_vector():
    assert has_positive_kernel_vector(quintic_config())
    assert has_positive_kernel_vector(PLANAR)
    # kernel is spanned by (1, 1, -1): no all-positive member
    skew = VectorConfig.single_group([(1, 0), (0, 1), (1, 1)])
    assert not has_positive_kernel_vector(skew)
    assert not has_positive_kernel_vector(
        VectorConfig.single_group([(1, 0), (0, 1)]))


def test_validate_config_and_reasons():
    good = validate_config(quintic_config())
    assert good.ok and good.reasons == ()

    unspanned = validate_config(VectorConfig.single_group([(2,), (-2,)]))
    assert not unspanned.ok
    assert any("span" in r for r in unspanned.reasons)

    lopsided = validate_config(VectorConfig.single_group([(1, 0), (0, 1), (1, 1)]))
    assert not lopsided.ok
    assert any("origin" in r for r in lopsided.reasons)

    with pytest.raises(InvalidConfigError):
        require_valid(VectorConfig.single_group([(2,), (-2,)]))


def test_validation_accepts_grouped_configs():
    cfg = VectorConfig((((1, 0), (-1, 0)), ((0, 1), (0, -1))))
    assert validate_config(cfg).ok
