"""
Tests for the exact geometry layer: the simplex solver and its infeasibility
certificates, hull membership, the local convex extension and the
H-representation used by the set checks.
"""

from fractions import Fraction

import pytest

from dca.errors import DomainError
from dca.geometry import (
    Halfspace,
    affine_hull,
    cell_hull_equality,
    convex_envelope_value,
    extreme_points,
    hull_halfspaces,
    hull_membership,
    local_convex_extension,
    polytope_vertices,
    solve_lp,
)
from dca.geometry.linalg import integer_scaled, null_space, rank, solve_square
from dca.geometry.polytope import cell_constraints
from dca.geometry.simplex import INFEASIBLE, OPTIMAL, UNBOUNDED
from dca.lattice import INF, DiscreteFunction, IntegerBox

from conftest import half, lset


class TestLinearAlgebra:
    """rref-based helpers."""

    def test_rank_and_null_space(self):
        """A rank-1 2x3 system has a two-dimensional kernel."""
        rows = [[1, 2, 3], [2, 4, 6]]
        assert rank(rows) == 1
        kernel = null_space(rows, 3)
        assert len(kernel) == 2
        for w in kernel:
            assert sum(a * b for a, b in zip(rows[0], w)) == 0

    def test_solve_square_singular(self):
        """Singular systems return None."""
        assert solve_square([[1, 1], [2, 2]], [1, 2]) is None
        assert solve_square([[2, 0], [0, 4]], [1, 1]) == (Fraction(1, 2), Fraction(1, 4))

    def test_integer_scaled(self):
        """Rational normals become coprime integers with the same direction."""
        ints, factor = integer_scaled([half(1), Fraction(-3, 4)])
        assert ints == (2, -3)
        assert factor == 4


class TestSimplex:
    """Two-phase simplex with Bland's rule."""

    def test_optimal(self):
        """min x1 + 2 x2 on x1 + x2 = 1 picks x1."""
        result = solve_lp([[1, 1]], [1], [1, 2])
        assert result.status == OPTIMAL
        assert result.x == (1, 0)
        assert result.objective == 1

    def test_infeasible_has_farkas_certificate(self):
        """x1 + x2 = -1 with x >= 0: y.A <= 0 and y.b > 0."""
        a, b = [[1, 1]], [-1]
        result = solve_lp(a, b)
        assert result.status == INFEASIBLE
        y = result.farkas
        assert all(sum(y[i] * a[i][j] for i in range(len(a))) <= 0 for j in range(2))
        assert sum(y[i] * b[i] for i in range(len(b))) > 0

    def test_unbounded(self):
        """min -x1 on x1 - x2 = 0 is unbounded."""
        assert solve_lp([[1, -1]], [0], [-1, 0]).status == UNBOUNDED

    def test_degenerate_feasibility(self):
        """Redundant equality rows are tolerated."""
        result = solve_lp([[1, 1], [2, 2]], [1, 2])
        assert result.status == OPTIMAL
        assert sum(result.x) == 1


class TestHullMembership:
    """Combinations inside, separating halfspaces outside."""

    def test_inside_returns_verified_combination(self):
        """(1/2, 1/2) is the average of (0,0) and (1,1)."""
        points = lset((0, 0), (1, 1), (1, 0))
        result = hull_membership((half(1), half(1)), points)
        assert result.inside
        assert result.combination.verify(points)

    def test_outside_returns_separator(self, ex31_sum):
        """(0, 0) lies outside the diamond of the first example."""
        result = hull_membership((0, 0), ex31_sum)
        assert not result
        assert result.separator.separates((0, 0), ex31_sum.points)

    def test_separator_description(self):
        """Halfspaces render as <normal, z> <= offset with exact offsets."""
        assert Halfspace.canonical((2, 0), 1).describe() == "<(1, 0), z> <= 1/2"
        assert Halfspace((-1, 1), Fraction(3)).describe() == "<(-1, 1), z> <= 3"

    def test_empty_point_set_rejected(self):
        """An empty V is an error, not a verdict."""
        with pytest.raises(DomainError):
            hull_membership((0,), [])

    def test_combination_merges_duplicates(self):
        """Repeated points are merged before weights are reported."""
        combo = hull_membership((half(1),), [(0,), (1,), (1,)]).combination
        assert combo.support == (((0,), half(1)), ((1,), half(1)))


class TestLocalExtension:
    """f~ over N(x) and the global envelope."""

    def test_integer_point_is_exact(self, l1_norm):
        """At integer points the extension equals f."""
        value, combo = local_convex_extension(l1_norm, (1, -2))
        assert value == 3
        assert combo.points() == [(1, -2)]

    def test_half_point_of_l1_norm(self, l1_norm):
        """|x1| + |x2| at (1/2, 1/2) extends to 1."""
        value, combo = local_convex_extension(l1_norm, (half(1), half(1)))
        assert value == 1
        assert combo.verify()
        assert combo.value(l1_norm) == value

    def test_empty_neighbourhood_is_inf(self):
        """All of N(x) outside dom f gives +inf with no combination."""
        f = DiscreteFunction.from_callable(IntegerBox((0,), (3,)), lambda x: 0 if x[0] == 0 else None)
        assert local_convex_extension(f, (Fraction(5, 2),)) == (INF, None)

    def test_outside_box_rejected(self, l1_norm):
        """Queries outside the table box are domain errors."""
        with pytest.raises(DomainError):
            local_convex_extension(l1_norm, (3, 0))

    def test_enumeration_order_does_not_matter(self, l2sq_norm):
        """Reversing the LP columns leaves the optimum unchanged."""
        x = (half(1), Fraction(-3, 2))
        forward, _ = local_convex_extension(l2sq_norm, x)
        backward, _ = local_convex_extension(l2sq_norm, x, order=lambda pts: pts[::-1])
        assert forward == backward

    def test_envelope_below_local_extension(self):
        """The global envelope can undercut the local extension."""
        f = DiscreteFunction.from_callable(IntegerBox((0,), (2,)), lambda x: [0, 5, 0][x[0]])
        assert convex_envelope_value(f, (1,)) == 0
        assert local_convex_extension(f, (1,))[0] == 5


class TestPolytope:
    """Affine hulls, facets and the cell-wise hull comparison."""

    def test_affine_hull_of_segment(self):
        """A segment in the plane has one equality."""
        hull = affine_hull([(0, 0), (2, 2)])
        assert hull.dim == 1
        assert len(hull.equalities) == 1

    def test_extreme_points_drop_interior(self):
        """The centre of a square is not a vertex."""
        points = [(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)]
        assert extreme_points(points) == [(0, 0), (0, 2), (2, 0), (2, 2)]

    def test_diamond_has_four_facets(self, ex31_sum):
        """conv of the first example sum is a square rotated by 45 degrees."""
        hrep = hull_halfspaces(ex31_sum.points)
        assert len(hrep.facets) == 4
        assert hrep.contains((1, 1))
        assert not hrep.contains((0, 0))

    def test_cell_vertices(self, ex31_sum):
        """The diamond cut by the cell [0,1]^2 is a triangle with corner (1,1)."""
        hrep = hull_halfspaces(ex31_sum.points)
        vertices = polytope_vertices(hrep, cell_constraints((0, 0)))
        assert vertices == [(0, 1), (1, 0), (1, 1)]

    def test_hole_detected_cellwise(self, ex31_sum):
        """(1,1) is a hole of the diamond; a full box has none."""
        assert cell_hull_equality(ex31_sum, (0, 0)) == (1, 1)
        square = lset((0, 0), (0, 1), (1, 0), (1, 1))
        assert cell_hull_equality(square, (0, 0)) is None
