"""Elementary operations on function tables: shift, sign inversion, scaling,
linear subtraction, domain scaling and restriction to a coordinate subspace."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from dca.errors import DimensionError, DomainError
from dca.lattice.function import DiscreteFunction
from dca.lattice.points import IntegerBox, add, inner, lattice_point, rational_point
from dca.lattice.values import INF, scale_value, to_fraction

logger = logging.getLogger("dca.lattice")


@dataclass(frozen=True)
class Shift:
    """f(x) -> f(x + b)."""

    b: tuple


@dataclass(frozen=True)
class Negate:
    """f(x) -> f(-x)."""


@dataclass(frozen=True)
class ScaleValues:
    a: Fraction


@dataclass(frozen=True)
class SubtractLinear:
    """f -> f[-p], f[-p](x) = f(x) - <p, x>."""

    p: tuple


@dataclass(frozen=True)
class DomainScale:
    """f -> f^alpha, f^alpha(x) = f(alpha x)."""

    alpha: int


@dataclass(frozen=True)
class Restrict:
    """Fix the listed coordinates at 0 and keep the others, in order."""

    fixed: tuple


TransformSpec = Union[Shift, Negate, ScaleValues, SubtractLinear, DomainScale, Restrict]


def basic_transform(f: DiscreteFunction, spec: TransformSpec) -> DiscreteFunction:
    logger.debug(f"applying {spec!r} to a table over {f.box}")
    if isinstance(spec, Shift):
        b = lattice_point(spec.b)
        if len(b) != f.dim:
            raise DimensionError(f"shift {b} does not match dimension {f.dim}")
        box = IntegerBox(tuple(a - c for a, c in zip(f.box.lo, b)),
                         tuple(a - c for a, c in zip(f.box.hi, b)))
        return DiscreteFunction(box, {x: f(add(x, b)) for x in box})

    if isinstance(spec, Negate):
        box = IntegerBox(tuple(-c for c in f.box.hi), tuple(-c for c in f.box.lo))
        return DiscreteFunction(box, {x: f(tuple(-c for c in x)) for x in box})

    if isinstance(spec, ScaleValues):
        a = to_fraction(spec.a)
        if a < 0:
            raise DomainError(f"value scaling needs a >= 0, got {a}")
        return DiscreteFunction(f.box, {x: scale_value(a, v) for x, v in f.values.items()})

    if isinstance(spec, SubtractLinear):
        p = rational_point(spec.p)
        if len(p) != f.dim:
            raise DimensionError(f"linear functional {p} does not match dimension {f.dim}")
        return DiscreteFunction(f.box, {x: v if v is INF else v - inner(p, x)
                                        for x, v in f.values.items()})

    if isinstance(spec, DomainScale):
        alpha = spec.alpha
        if not isinstance(alpha, int) or alpha < 1:
            raise DomainError(f"domain scaling needs an integer alpha >= 1, got {alpha}")
        lo = tuple(-((-c) // alpha) for c in f.box.lo)
        hi = tuple(c // alpha for c in f.box.hi)
        if any(a > b for a, b in zip(lo, hi)):
            raise DomainError(f"no x with {alpha}x inside {f.box}")
        box = IntegerBox(lo, hi)
        return DiscreteFunction(box, {x: f(tuple(alpha * c for c in x)) for x in box})

    if isinstance(spec, Restrict):
        fixed = sorted(set(spec.fixed))
        if any(i < 0 or i >= f.dim for i in fixed):
            raise DimensionError(f"restriction indices {fixed} out of range for dimension {f.dim}")
        kept = [i for i in range(f.dim) if i not in fixed]
        if not kept:
            raise DimensionError("restriction must keep at least one coordinate")
        if any(not f.box.lo[i] <= 0 <= f.box.hi[i] for i in fixed):
            raise DomainError("restriction subspace misses the box")
        box = IntegerBox(tuple(f.box.lo[i] for i in kept), tuple(f.box.hi[i] for i in kept))

        def lift(x):
            full = [0] * f.dim
            for i, c in zip(kept, x):
                full[i] = c
            return tuple(full)

        return DiscreteFunction(box, {x: f(lift(x)) for x in box})

    raise TypeError(f"unsupported transform descriptor {spec!r}")


def subtract_linear(f: DiscreteFunction, p) -> DiscreteFunction:
    return basic_transform(f, SubtractLinear(tuple(p)))
