from .simplex import LPResult, solve_lp
from .hull import (
    ConvexCombination,
    Halfspace,
    HullMembership,
    convex_envelope_value,
    hull_membership,
    local_convex_extension,
)
from .polytope import (
    HRepresentation,
    affine_hull,
    cell_hull_equality,
    extreme_points,
    hull_halfspaces,
    polytope_vertices,
)
