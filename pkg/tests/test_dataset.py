from pathlib import Path

import pytest

from mirrormaps import dataset, inputdoc, linalg, polytope
from mirrormaps.checker import DEFAULT_CHECKS
from mirrormaps.lattice import validate_config


def test_sixteen_entries_with_unique_keys():
    es = dataset.entries()
    assert len(es) == 16
    assert len(set(dataset.keys())) == 16
    assert dataset.get("p4-8b").span_index == 2


def test_boundary_histogram():
    counts = {}
    for e in dataset.entries():
        counts[e.boundary_points] = counts.get(e.boundary_points, 0) + 1
    assert counts == {3: 1, 4: 3, 5: 2, 6: 4, 7: 2, 8: 3, 9: 1}


def test_boundary_points_match_geometry():
    for e in dataset.entries():
        hull = e.polygon()
        total = len(polytope.lattice_points(hull))
        interior = len(polytope.interior_lattice_points(hull))
        assert interior == 1
        assert total - interior == e.boundary_points


def test_dual_pairing():
    for e in dataset.entries():
        dual = dataset.get(e.dual_key)
        assert dual.dual_key == e.key
        assert e.boundary_points + dual.boundary_points == 12


def test_span_index_matches_vertex_lattice():
    reduced = {"p3-8": 2, "p3-9": 3, "p4-8b": 2}
    for e in dataset.entries():
        assert e.span_index == reduced.get(e.key, 1)
        cols = [[v[i] for v in e.vertices] for i in range(2)]
        f1, f2 = linalg.invariant_factors(cols)
        assert e.span_index == f1 * f2


def test_config_spans_and_preserves_relations():
    for e in dataset.entries():
        cfg = e.config()
        assert validate_config(cfg).ok
        if e.span_index == 1:
            assert cfg.groups == (e.vertices,)
            continue
        # same relation lattice: each kernel annihilates the other matrix
        original = [[v[i] for v in e.vertices] for i in range(2)]
        for k in linalg.integer_kernel_basis(cfg.matrix()):
            assert all(sum(r * x for r, x in zip(row, k)) == 0
                       for row in original)
        for k in linalg.integer_kernel_basis(original):
            assert all(sum(r * x for r, x in zip(row, k)) == 0
                       for row in cfg.matrix())


def test_verify_all_reflexive_and_fano():
    rows = dataset.verify()
    assert len(rows) == 16
    assert all(reflexive and fano for _, reflexive, fano in rows)


def test_get_unknown_key():
    with pytest.raises(KeyError, match="p3-3"):
        dataset.get("p7-1")


def test_write_batch_documents_round_trip(tmp_path):
    paths = dataset.write_batch_documents(tmp_path, precision=7)
    assert len(paths) == 16
    for path, entry in zip(paths, dataset.entries()):
        request = inputdoc.load_request(path)
        assert request.label == entry.key
        assert request.precision == 7
        assert request.checks == DEFAULT_CHECKS
        assert request.config == entry.config()


def test_bundled_documents():
    directory = Path(dataset.bundled_documents_dir())
    files = sorted(directory.glob("*.txt"))
    assert len(files) == 16
    for path, entry in zip(files, dataset.entries()):
        request = inputdoc.load_request(str(path))
        assert request.label == entry.key
        assert request.precision == 50
        assert request.config == entry.config()
