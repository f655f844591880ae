from __future__ import annotations

from fractions import Fraction

from dca.errors import DimensionError
from dca.lattice.function import DiscreteFunction
from dca.lattice.points import IntegerBox


def quadratic_function(q, c=None, box: IntegerBox = None) -> DiscreteFunction:
    """x^T Q x + c^T x tabulated on ``box``."""
    q = [[Fraction(v) for v in row] for row in q]
    n = len(q)
    c = [Fraction(0)] * n if c is None else [Fraction(v) for v in c]
    if box is None or box.dim != n or len(c) != n:
        raise DimensionError(f"quadratic of size {n} needs a box and a linear term of the same dimension")

    def value(x):
        quad = sum((q[i][j] * x[i] * x[j] for i in range(n) for j in range(n)), Fraction(0))
        return quad + sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))

    return DiscreteFunction.from_callable(box, value)
