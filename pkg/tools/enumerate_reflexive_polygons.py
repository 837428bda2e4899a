#!/usr/bin/env python3
"""Enumerate 2D reflexive polygons and classify them up to GL(2,Z).

Search space: polygons with primitive vertices in [-3,3]^2 whose only
interior lattice point is the origin.  Vertices of such polygons are
always primitive (a multiple m*u, m >= 2, would put u strictly inside),
and every known class has a representative in this box; the script
cross-checks the classical counts (16 classes, boundary-size histogram
1,3,2,4,2,3,1 for b = 3..9, dual pairing b + b* = 12) so a too-small
box cannot pass silently.

Growth is by ascending vertex insertion.  The invariant "no nonzero
lattice point strictly inside the hull" is monotone under taking
supersets, so pruning on it is exhaustive; thin hulls are never pruned
(their planar interior is empty), which is what lets sets like the
square's vertex pair (-1,-1),(-1,1) survive as a prefix.

The bundled dataset freezes this script's output; rerun it after any
change to the polytope stack and diff.
"""

import itertools
import sys
from math import gcd
from pathlib import Path

try:
    from mirrormaps import linalg, polytope
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
    from mirrormaps import linalg, polytope

BOX = 3


def primitive_points(box):
    pts = []
    for x in range(-box, box + 1):
        for y in range(-box, box + 1):
            if (x, y) != (0, 0) and gcd(abs(x), abs(y)) == 1:
                pts.append((x, y))
    return sorted(pts)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def hull_contains(poly, p):
    return (all(dot(a, p) <= b for a, b in poly.facets)
            and all(dot(a, p) == b for a, b in poly.span_equations))


def growth_ok(poly):
    if not poly.is_full_dimensional:
        return True
    return all(not any(q) for q in polytope.interior_lattice_points(poly))


def enumerate_fano(points):
    """All polygons with vertex set inside `points`, interior = {origin}."""
    found = {}
    stack = [((i,), polytope.convex_hull([points[i]]))
             for i in range(len(points))]
    states = 0
    while stack:
        idxs, hull = stack.pop()
        states += 1
        if (hull.is_full_dimensional
                and polytope.contains_in_interior(hull, (0, 0))
                and len(hull.vertices) == len(idxs)):
            found.setdefault(tuple(sorted(hull.vertices)), hull)
        for j in range(idxs[-1] + 1, len(points)):
            if hull_contains(hull, points[j]):
                continue
            grown = polytope.convex_hull(
                [points[i] for i in idxs] + [points[j]])
            if growth_ok(grown):
                stack.append((idxs + (j,), grown))
    return found, states


def is_reflexive_hull(poly):
    return polytope.is_reflexive(poly)


def point_set(poly):
    return tuple(sorted(polytope.lattice_points(poly)))


def equivalent(sp, sq):
    """Is there M in GL(2,Z) with M(sp) = sq, as lattice point sets?"""
    if len(sp) != len(sq):
        return None
    u, v = next((a, b) for a, b in itertools.combinations(sp, 2)
                if a[0] * b[1] - a[1] * b[0] != 0)
    den = u[0] * v[1] - u[1] * v[0]
    for up, vp in itertools.permutations(sq, 2):
        # M [u v] = [u' v'] solved by the adjugate of [u v]
        nums = (up[0] * v[1] - vp[0] * u[1], -up[0] * v[0] + vp[0] * u[0],
                up[1] * v[1] - vp[1] * u[1], -up[1] * v[0] + vp[1] * u[0])
        if any(n % den for n in nums):
            continue
        m00, m01, m10, m11 = (n // den for n in nums)
        if abs(m00 * m11 - m01 * m10) != 1:
            continue
        image = tuple(sorted((m00 * p[0] + m01 * p[1],
                              m10 * p[0] + m11 * p[1]) for p in sp))
        if image == sq:
            return ((m00, m01), (m10, m11))
    return None


def span_index(vertices):
    factors = linalg.invariant_factors([list(v) for v in vertices])
    assert len(factors) == 2, "vertices must span a rank-2 lattice"
    idx = factors[0] * factors[1]
    return idx


def main():
    points = primitive_points(BOX)
    print("primitive points in box: %d" % len(points))
    found, states = enumerate_fano(points)
    print("growth states visited: %d" % states)
    print("fano polygons found (raw coordinates): %d" % len(found))
    reflexive = {vs: h for vs, h in found.items() if is_reflexive_hull(h)}
    print("reflexive among them: %d" % len(reflexive))

    classes = []  # list of dicts
    for vs, hull in sorted(reflexive.items()):
        s = point_set(hull)
        for cls in classes:
            if equivalent(cls["points"], s) is not None:
                cls["members"].append(vs)
                break
        else:
            classes.append({"points": s, "members": [vs], "hull": hull})

    assert len(classes) == 16, "expected 16 classes, got %d" % len(classes)

    for cls in classes:
        # smallest-coordinate member, ties broken lexicographically, so
        # the frozen dataset representative is reproducible
        rep = min(cls["members"],
                  key=lambda vs: (max(abs(c) for v in vs for c in v),
                                  sum(abs(c) for v in vs for c in v), vs))
        hull = reflexive[rep]
        cls["rep"] = rep
        cls["V"] = len(hull.vertices)
        cls["b"] = len(point_set(hull)) - 1  # all non-interior points
        cls["index"] = span_index(rep)

    classes.sort(key=lambda c: (c["V"], c["b"], c["rep"]))

    hist = {}
    for cls in classes:
        hist[cls["b"]] = hist.get(cls["b"], 0) + 1
    assert [hist.get(b, 0) for b in range(3, 10)] == [1, 3, 2, 4, 2, 3, 1], \
        "boundary-size histogram off: %r" % hist

    # dual pairing: the polar of a reflexive polygon has the facet
    # normals as vertices and must land back in the classification
    for i, cls in enumerate(classes):
        dual_pts = point_set(polytope.convex_hull(
            [a for a, b in reflexive[cls["rep"]].facets]))
        partner = next(j for j, other in enumerate(classes)
                       if equivalent(other["points"], dual_pts) is not None)
        cls["dual"] = partner
        assert cls["b"] + classes[partner]["b"] == 12, \
            "dual boundary counts must sum to 12"
    for i, cls in enumerate(classes):
        assert classes[cls["dual"]]["dual"] == i, "duality must be an involution"

    print()
    for i, cls in enumerate(classes):
        print("class %2d: V=%d b=%d index=%d dual=%2d members=%3d  vertices=%s"
              % (i, cls["V"], cls["b"], cls["index"], cls["dual"],
                 len(cls["members"]), cls["rep"]))
        if cls["index"] > 1:
            reduced = linalg.span_coordinates([list(v) for v in cls["rep"]])
            print("          span-reduced: %s" % (tuple(reduced),))


if __name__ == "__main__":
    main()
