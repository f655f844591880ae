from __future__ import annotations

from dca.errors import DimensionError
from dca.lattice.function import DiscreteFunction
from dca.lattice.points import IntegerBox, inner


def conjugate(f: DiscreteFunction, pbox: IntegerBox) -> DiscreteFunction:
    """f*(p) = max over dom f of <p, x> - f(x), tabulated on ``pbox`` only."""
    if pbox.dim != f.dim:
        raise DimensionError(f"price box {pbox} does not match dimension {f.dim}")
    items = f.finite_items()
    return DiscreteFunction.from_callable(pbox, lambda p: max(inner(p, x) - v for x, v in items))
