"""The sixteen 2D reflexive vertex families, bundled as fixture data.

Derived by tools/enumerate_reflexive_polygons.py: polygons with
primitive vertices whose unique interior lattice point is the origin,
classified up to GL(2,Z).  The tool asserts the classical counts on
every run (16 classes, boundary-size histogram 1,3,2,4,2,3,1 for
b = 3..9, dual pairing b + b* = 12), so the frozen table below cannot
drift silently.

Three classes have vertex sets spanning a proper sublattice of Z^2:
two of index 2 and one of index 3.  Their computing configurations are
re-expressed in a basis of that sublattice.  The series data depend
only on the integer relations among the vectors, which the rewrite
preserves exactly; the full-span form is what the validation layer
accepts.  The polygon itself keeps the published coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg, polytope
from .lattice import VectorConfig
from .polytope import LatticePolytope

Vertices = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class DatasetEntry:
    key: str
    label: str
    vertices: Vertices          # classification representative
    boundary_points: int
    span_index: int             # index of the vertex span in Z^2
    dual_key: str

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def polygon(self) -> LatticePolytope:
        return polytope.convex_hull(self.vertices)

    def config(self) -> VectorConfig:
        """Vectors as one group, in coordinates that span the lattice."""
        if self.span_index == 1:
            return VectorConfig.single_group(self.vertices)
        reduced = linalg.span_coordinates([list(v) for v in self.vertices])
        return VectorConfig.single_group(tuple(reduced))


_ENTRIES = (
    DatasetEntry("p3-3", "triangle with 3 boundary points",
                 ((-1, -1), (0, 1), (1, 0)), 3, 1, "p3-9"),
    DatasetEntry("p3-4", "triangle with 4 boundary points",
                 ((-1, -1), (-1, 1), (1, 0)), 4, 1, "p3-8"),
    DatasetEntry("p3-6", "triangle with 6 boundary points",
                 ((-2, -1), (0, 1), (1, -1)), 6, 1, "p3-6"),
    DatasetEntry("p3-8", "triangle with 8 boundary points",
                 ((-2, -1), (0, 1), (2, -1)), 8, 2, "p3-4"),
    DatasetEntry("p3-9", "triangle with 9 boundary points",
                 ((-2, -1), (1, -1), (1, 2)), 9, 3, "p3-3"),
    DatasetEntry("p4-4a", "quadrilateral with 4 boundary points",
                 ((-1, -1), (-1, 0), (0, 1), (1, 0)), 4, 1, "p4-8a"),
    DatasetEntry("p4-4b", "quadrilateral with 4 boundary points (the diamond)",
                 ((-1, 0), (0, -1), (0, 1), (1, 0)), 4, 1, "p4-8b"),
    DatasetEntry("p4-5", "quadrilateral with 5 boundary points",
                 ((-1, -1), (-1, 0), (0, 1), (1, -1)), 5, 1, "p4-7"),
    DatasetEntry("p4-6", "quadrilateral with 6 boundary points",
                 ((-1, -1), (-1, 0), (1, -1), (1, 1)), 6, 1, "p4-6"),
    DatasetEntry("p4-7", "quadrilateral with 7 boundary points",
                 ((-2, -1), (0, 1), (1, -1), (1, 0)), 7, 1, "p4-5"),
    DatasetEntry("p4-8a", "quadrilateral with 8 boundary points",
                 ((-2, -1), (0, -1), (1, 0), (1, 2)), 8, 1, "p4-4a"),
    DatasetEntry("p4-8b", "quadrilateral with 8 boundary points (the square)",
                 ((-1, -1), (-1, 1), (1, -1), (1, 1)), 8, 2, "p4-4b"),
    DatasetEntry("p5-5", "pentagon with 5 boundary points",
                 ((-1, -1), (-1, 0), (0, -1), (0, 1), (1, 0)), 5, 1, "p5-7"),
    DatasetEntry("p5-6", "pentagon with 6 boundary points",
                 ((-1, -1), (-1, 0), (0, 1), (1, -1), (1, 0)), 6, 1, "p5-6"),
    DatasetEntry("p5-7", "pentagon with 7 boundary points",
                 ((-1, -1), (-1, 0), (0, 1), (1, -1), (1, 1)), 7, 1, "p5-5"),
    DatasetEntry("p6-6", "hexagon with 6 boundary points",
                 ((-1, -1), (-1, 0), (0, -1), (0, 1), (1, 0), (1, 1)), 6, 1,
                 "p6-6"),
)

_BY_KEY = {e.key: e for e in _ENTRIES}


def entries() -> tuple[DatasetEntry, ...]:
    return _ENTRIES


def keys() -> tuple[str, ...]:
    return tuple(e.key for e in _ENTRIES)


def get(key: str) -> DatasetEntry:
    try:
        return _BY_KEY[key]
    except KeyError:
        raise KeyError("no dataset entry %r; known keys: %s"
                       % (key, ", ".join(keys()))) from None


def verify() -> tuple[tuple[str, bool, bool], ...]:
    """(key, reflexive?, Fano?) for every entry; all must be True.

    Reflexivity is judged on the published polygon, Fano-ness on the
    computing configuration, so both the geometric provenance and the
    form the checker consumes are covered.
    """
    out = []
    for e in _ENTRIES:
        out.append((e.key, polytope.is_reflexive(e.polygon()),
                    polytope.is_fano(e.config())))
    return tuple(out)


def write_batch_documents(directory, precision: int = 50,
                          checks: tuple[str, ...] | None = None) -> list[str]:
    """Write one check-request document per entry; returns the paths.

    The documents carry the computing configurations, so any consumer
    of the input format can re-run the batch without this module.
    """
    import os

    from . import inputdoc
    from .checker import CheckRequest, DEFAULT_CHECKS

    os.makedirs(directory, exist_ok=True)
    paths = []
    for i, e in enumerate(_ENTRIES):
        request = CheckRequest(e.config(), precision,
                               checks=checks if checks else DEFAULT_CHECKS,
                               label=e.key)
        path = os.path.join(directory, "%02d-%s.txt" % (i, e.key))
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(inputdoc.serialize_request(request))
        paths.append(path)
    return paths


def bundled_documents_dir() -> str:
    """Directory with the committed precision-50 batch documents."""
    from importlib import resources

    return str(resources.files("mirrormaps") / "data" / "reflexive2d")


__all__ = [
    "DatasetEntry", "entries", "keys", "get", "verify",
    "write_batch_documents", "bundled_documents_dir",
]
