"""H-representation of conv(S), vertex enumeration of conv(S) cut by a unit
cell, and the cell-wise hull equality test behind set integral convexity.

Everything is brute force over point and constraint subsets; inputs are
desk-sized lattice sets in low dimension.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from dca.errors import DimensionError
from dca.geometry.hull import Halfspace, hull_membership
from dca.geometry.linalg import integer_scaled, null_space, rref, solve_square
from dca.lattice.points import IntegerBox, LatticeSet, inner, is_integral, sub

logger = logging.getLogger("dca.geometry")

MAX_DIM = 8


@dataclass(frozen=True)
class AffineHull:
    base: tuple
    directions: tuple  # basis of the linear span of S - base
    equalities: tuple  # ((normal, offset), ...): <normal, z> = offset on the hull

    @property
    def dim(self) -> int:
        return len(self.directions)


@dataclass(frozen=True)
class HRepresentation:
    equalities: tuple
    facets: tuple  # Halfspace, ...

    def contains(self, z) -> bool:
        return (all(inner(a, z) == b for a, b in self.equalities)
                and all(h.contains(z) for h in self.facets))


def affine_hull(points) -> AffineHull:
    points = sorted(set(tuple(p) for p in points))
    base = points[0]
    n = len(base)
    diffs = [sub(p, base) for p in points[1:]]
    directions = tuple(tuple(row) for row in rref(diffs)[0]) if diffs else ()
    normals = null_space([list(d) for d in directions], n) if directions else \
        [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    equalities = []
    for normal in normals:
        ints, _ = integer_scaled(normal)
        equalities.append((ints, inner(ints, base)))
    return AffineHull(base, directions, tuple(equalities))


def extreme_points(points) -> list:
    """Vertices of conv(points): those not in the hull of the others."""
    points = sorted(set(tuple(p) for p in points))
    if len(points) <= 2:
        return points
    return [p for i, p in enumerate(points)
            if not hull_membership(p, points[:i] + points[i + 1:])]


def hull_halfspaces(points) -> HRepresentation:
    """Equalities of the affine hull plus facet inequalities relative to it."""
    points = sorted(set(tuple(p) for p in points))
    if len(points[0]) > MAX_DIM:
        raise DimensionError(f"facet enumeration is limited to dimension {MAX_DIM}")
    hull = affine_hull(points)
    r = hull.dim
    if r == 0:
        return HRepresentation(hull.equalities, ())
    vertices = extreme_points(points)
    basis = [list(d) for d in hull.directions]
    facets = set()
    for subset in itertools.combinations(vertices, r):
        p0 = subset[0]
        diffs = [sub(p, p0) for p in subset[1:]]
        # normal c = basis^T w orthogonal to the subset's directions;
        # a kernel of dimension > 1 means the subset is degenerate
        system = [[inner(row, d) for row in basis] for d in diffs]
        kernel = null_space(system, r)
        if len(kernel) != 1:
            continue
        w = kernel[0]
        c = [sum(w[k] * basis[k][i] for k in range(r)) for i in range(len(p0))]
        offset = inner(c, p0)
        sides = [inner(c, s) - offset for s in vertices]
        if all(v <= 0 for v in sides):
            facets.add(Halfspace.canonical(c, offset))
        elif all(v >= 0 for v in sides):
            facets.add(Halfspace.canonical([-v for v in c], -offset))
    return HRepresentation(hull.equalities, tuple(sorted(facets, key=lambda h: (h.normal, h.offset))))


def cell_constraints(anchor) -> list:
    """Halfspaces of the unit cell [a, a + 1]."""
    n = len(anchor)
    out = []
    for i in range(n):
        e = tuple(int(j == i) for j in range(n))
        out.append(Halfspace(e, Fraction(anchor[i] + 1)))
        out.append(Halfspace(tuple(-v for v in e), Fraction(-anchor[i])))
    return out


def polytope_vertices(hrep: HRepresentation, extra=()) -> list:
    """Vertices of {z : hrep} cut by extra halfspaces, sorted."""
    inequalities = list(hrep.facets) + list(extra)
    equalities = list(hrep.equalities)
    n = len(inequalities[0].normal) if inequalities else len(equalities[0][0])
    need = n - len(equalities)
    vertices = set()
    for chosen in itertools.combinations(inequalities, need):
        a = [list(normal) for normal, _ in equalities] + [list(h.normal) for h in chosen]
        b = [offset for _, offset in equalities] + [h.offset for h in chosen]
        z = solve_square(a, b)
        if z is None:
            continue
        if all(h.contains(z) for h in inequalities):
            vertices.add(z)
    return sorted(vertices)


def _relevant_facets(hrep: HRepresentation, anchor) -> tuple:
    """Facets whose hyperplane can touch the cell (some corner violates them)."""
    corners = list(itertools.product(*((a, a + 1) for a in anchor)))
    return tuple(h for h in hrep.facets if not all(h.contains(c) for c in corners))


def cell_hull_equality(s: LatticeSet, anchor, hrep: HRepresentation | None = None):
    """None if conv(S) cap [a, a+1] is inside conv(S cap [a, a+1]), else a witness point."""
    anchor = tuple(anchor)
    cell = IntegerBox(anchor, tuple(a + 1 for a in anchor))
    local = s.within(cell)
    if len(local) == cell.size:
        return None
    hrep = hrep or hull_halfspaces(s.points)
    trimmed = HRepresentation(hrep.equalities, _relevant_facets(hrep, anchor))
    for z in polytope_vertices(trimmed, cell_constraints(anchor)):
        if is_integral(z):
            point = tuple(int(c) for c in z)
            if point not in s:
                return z
            continue
        if not local or not hull_membership(z, local):
            return z
    return None
