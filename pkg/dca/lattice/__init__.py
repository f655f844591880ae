from .values import INF, ExtendedValue, format_value, is_finite, to_extended, to_fraction
from .points import (
    IntegerBox,
    LatticePoint,
    LatticeSet,
    RationalPoint,
    lattice_point,
    linf_distance,
    rational_point,
)
from .function import DiscreteFunction
from .steps import (
    StepDecomposition,
    decompose_difference,
    integral_neighborhood,
    midpoint,
    rounded_midpoints,
)
from .transforms import (
    DomainScale,
    Negate,
    Restrict,
    ScaleValues,
    Shift,
    SubtractLinear,
    basic_transform,
)
