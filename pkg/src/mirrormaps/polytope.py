"""Exact lattice polytopes: hulls, Minkowski sums, interior points, predicates.

The convex hull is computed by the double description method on the cone
of valid inequalities in R^(d+1), entirely over the integers, so facet
normals come out exact and primitive.  Lower-dimensional polytopes are
first-class: they carry the affine-span equations and their facet list
describes the *relative* facets, which is what the interior tests use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from . import linalg
from .lattice import InvalidConfigError, VectorConfig, require_valid

Point = tuple[int, ...]
# inequality a . x <= b with primitive integer a
Facet = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class LatticePolytope:
    vertices: tuple[Point, ...]
    facets: tuple[Facet, ...]
    span_equations: tuple[Facet, ...]  # a . x == b for all points
    ambient: int
    dim: int

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def _dual_description(points: list[Point]) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Lineality basis and extreme rays of the valid-inequality cone.

    A vector w = (a, c) encodes the inequality a . x <= -c.  The cone is
    {w : (p, 1) . w <= 0 for every input point p}; its lineality space
    gives the affine-span equations and its extreme rays the facets.
    """
    m = len(points[0]) + 1
    ineqs = [tuple(-x for x in p) + (-1,) for p in points]  # h . w >= 0
    return linalg.cone_description(ineqs, m)


def convex_hull(points) -> LatticePolytope:
    """Hull of a nonempty set of integer points."""
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise ValueError("need at least one point")
    ambient = len(pts[0])
    lineality, rays = _dual_description(pts)

    span_equations = []
    for w in lineality:
        a, c = w[:-1], w[-1]
        if all(x == 0 for x in a):
            raise RuntimeError("internal bug: degenerate span equation")
        if next(x for x in a if x) < 0:
            a, c = tuple(-x for x in a), -c
        span_equations.append((a, -c))
    span_equations.sort()
    dim = ambient - len(span_equations)

    facets = []
    if dim > 0:
        base = pts[0]
        for w in rays:
            a, c = w[:-1], w[-1]
            # drop inequalities constant on the affine span (vertical class)
            if all(_dot(a, p) == _dot(a, base) for p in pts):
                continue
            g = math.gcd(*(abs(x) for x in a))
            if c % g:
                raise RuntimeError("internal bug: non-integral facet offset")
            facets.append((tuple(x // g for x in a), -c // g))
        facets.sort()

    span_rows = [eq for eq, _ in span_equations]
    vertices = []
    if dim == 0:
        vertices = [pts[0]]
    else:
        for p in pts:
            active = [a for a, b in facets if _dot(a, p) == b]
            if linalg.rational_rank(active + span_rows) == ambient:
                vertices.append(p)
    return LatticePolytope(
        vertices=tuple(sorted(vertices)),
        facets=tuple(facets),
        span_equations=tuple(span_equations),
        ambient=ambient,
        dim=dim,
    )


def minkowski_sum(polys) -> LatticePolytope:
    """Hull of pairwise vertex sums, folded left to right."""
    polys = list(polys)
    if not polys:
        raise ValueError("need at least one summand")
    ambient = polys[0].ambient
    if any(p.ambient != ambient for p in polys):
        raise ValueError("summands live in different ambient dimensions")
    acc = polys[0].vertices
    for other in polys[1:]:
        acc = {tuple(a + b for a, b in zip(u, v))
               for u in acc for v in other.vertices}
        acc = convex_hull(acc).vertices
    return convex_hull(acc)


def summand_polytopes(config: VectorConfig) -> list[LatticePolytope]:
    """One hull per group: conv({v_ij : j} united with 0)."""
    origin = (0,) * config.dim
    return [convex_hull(list(g) + [origin]) for g in config.groups]


def config_polytope(config: VectorConfig) -> LatticePolytope:
    """Minkowski sum of the per-group hulls."""
    return minkowski_sum(summand_polytopes(config))


def _bounding_box(poly: LatticePolytope):
    los = [min(v[c] for v in poly.vertices) for c in range(poly.ambient)]
    his = [max(v[c] for v in poly.vertices) for c in range(poly.ambient)]
    return los, his


def _on_span(poly: LatticePolytope, x) -> bool:
    return all(_dot(a, x) == b for a, b in poly.span_equations)


def lattice_points(poly: LatticePolytope) -> tuple[Point, ...]:
    """All lattice points of the polytope (boundary included)."""
    los, his = _bounding_box(poly)
    out = []
    for x in product(*(range(lo, hi + 1) for lo, hi in zip(los, his))):
        if _on_span(poly, x) and all(_dot(a, x) <= b for a, b in poly.facets):
            out.append(x)
    return tuple(sorted(out))


def interior_lattice_points(poly: LatticePolytope) -> tuple[Point, ...]:
    """Lattice points strictly inside the polytope.

    For a lower-dimensional polytope this is the relative interior: the
    affine-span equations must hold exactly and every relative facet
    strictly.  A zero-dimensional polytope is its own relative interior.
    """
    if poly.dim == 0:
        return poly.vertices
    los, his = _bounding_box(poly)
    out = []
    for x in product(*(range(lo, hi + 1) for lo, hi in zip(los, his))):
        if _on_span(poly, x) and all(_dot(a, x) < b for a, b in poly.facets):
            out.append(x)
    return tuple(sorted(out))


def in_relative_interior(poly: LatticePolytope, x) -> bool:
    x = tuple(int(v) for v in x)
    if poly.dim == 0:
        return x == poly.vertices[0]
    return _on_span(poly, x) and all(_dot(a, x) < b for a, b in poly.facets)


def contains_in_interior(poly: LatticePolytope, x) -> bool:
    """Strict full-dimensional interior; always False for thin polytopes."""
    if not poly.is_full_dimensional:
        return False
    return all(_dot(a, x) < b for a, b in poly.facets)


def is_fano(config: VectorConfig) -> bool:
    """Is the origin the unique interior lattice point of the summed polytope?

    Raises InvalidConfigError when the configuration fails validation.
    """
    require_valid(config)
    delta = config_polytope(config)
    origin = (0,) * config.dim
    return interior_lattice_points(delta) == (origin,)


def is_reflexive(poly: LatticePolytope) -> bool:
    """All facets at lattice distance one from an interior origin.

    False (rather than an error) when the origin is not interior, which
    includes every lower-dimensional polytope.
    """
    origin = (0,) * poly.ambient
    if not poly.is_full_dimensional or not contains_in_interior(poly, origin):
        return False
    return all(b == 1 for _, b in poly.facets)


def reflected_hull_excludes_origin(config: VectorConfig, slot: int) -> bool:
    """Geometric emptiness certificate for a slot's corrective monoid.

    True when the origin is not interior to the hull of the other vectors
    together with the reflected vector -v_slot; in that case the monoid of
    kernel vectors negative exactly at this slot is empty.
    """
    flat = config.flat_vectors
    if not 0 <= slot < len(flat):
        raise ValueError("slot %d out of range" % slot)
    pts = [v for s, v in enumerate(flat) if s != slot]
    pts.append(tuple(-x for x in flat[slot]))
    hull = convex_hull(pts)
    origin = (0,) * config.dim
    return not contains_in_interior(hull, origin)


__all__ = [
    "LatticePolytope", "convex_hull", "minkowski_sum", "summand_polytopes",
    "config_polytope", "lattice_points", "interior_lattice_points",
    "in_relative_interior", "contains_in_interior", "is_fano",
    "is_reflexive", "reflected_hull_excludes_origin", "InvalidConfigError",
]
