"""Exhaustive facet enumeration, used only as an independent oracle for the
incremental hull in the tests.

Works in affine-hull coordinates: every facet hyperplane is spanned by dim
affinely independent input points, so trying all dim-subsets and keeping the
one-sided hyperplanes enumerates every facet.
"""

from fractions import Fraction
from itertools import combinations

from descregions.linalg import dot, hyperplane_normal, primitive, vneg
from descregions.polytope import Polytope, affine_hull


def _key(normal, offset):
    prim = primitive(normal)
    for a, b in zip(prim, normal):
        if b != 0:
            return prim, offset * (a / b)
    raise AssertionError("zero normal")


def brute_force_facets(points):
    """Set of (normal, offset) outer facet halfspaces in hull coordinates."""
    hull = affine_hull(points)
    d = hull.dim
    if d == 0:
        return set()
    hp = [hull.coords(p) for p in points]
    if d == 1:
        vals = [c[0] for c in hp]
        return {
            _key((Fraction(1),), max(vals)),
            _key((Fraction(-1),), -min(vals)),
        }
    out = set()
    for comb in combinations(range(len(hp)), d):
        pts = [hp[i] for i in comb]
        normal = hyperplane_normal(pts)
        if normal is None:
            continue
        offset = dot(normal, pts[0])
        values = [dot(normal, q) for q in hp]
        if all(v <= offset for v in values):
            out.add(_key(normal, offset))
        elif all(v >= offset for v in values):
            out.add(_key(vneg(normal), -offset))
    return out


def polytope_facets_in_hull_coords(P: Polytope):
    """The package's facet list mapped into hull coordinates for comparison."""
    out = set()
    for f in P.facets:
        w, a = f.halfspace.normal, f.halfspace.offset
        g = tuple(dot(w, b) for b in P.hull.basis)
        c = a - dot(w, P.hull.base)
        out.add(_key(g, c))
    return out
