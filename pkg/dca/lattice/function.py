from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from dca.errors import DimensionError, DomainError
from dca.lattice.points import IntegerBox, LatticePoint, LatticeSet, lattice_point
from dca.lattice.values import INF, ExtendedValue, is_finite, to_extended


@dataclass(frozen=True)
class DiscreteFunction:
    """A dense table over an integer box; every point outside the box is +inf."""

    box: IntegerBox
    values: Mapping[LatticePoint, ExtendedValue] = field(repr=False)

    def __post_init__(self):
        table = {}
        for x in self.box:
            try:
                table[x] = to_extended(self.values[x])
            except KeyError:
                raise DomainError(f"table has no entry for {x}") from None
        if len(self.values) != len(table):
            extra = next(lattice_point(x) for x in self.values if lattice_point(x) not in self.box)
            raise DomainError(f"table entry {extra} lies outside {self.box}")
        if not any(is_finite(v) for v in table.values()):
            raise DomainError("effective domain is empty")
        object.__setattr__(self, "values", table)

    @property
    def dim(self) -> int:
        return self.box.dim

    def __call__(self, x) -> ExtendedValue:
        if len(x) != self.dim:
            raise DimensionError(f"point {tuple(x)} does not have dimension {self.dim}")
        return self.values.get(tuple(x), INF)

    def domain_points(self) -> list:
        """dom f in lexicographic order."""
        return [x for x in self.box if is_finite(self.values[x])]

    def effective_domain(self) -> LatticeSet:
        return LatticeSet(self.dim, frozenset(self.domain_points()))

    def finite_items(self):
        return [(x, self.values[x]) for x in self.domain_points()]

    def minimum(self) -> tuple:
        """(first lexicographic minimiser, minimum value)."""
        best = None
        for x, v in self.finite_items():
            if best is None or v < best[1]:
                best = (x, v)
        return best

    def argmin(self) -> LatticeSet:
        _, low = self.minimum()
        return LatticeSet(self.dim, frozenset(x for x, v in self.finite_items() if v == low))

    def restrict_box(self, box: IntegerBox) -> DiscreteFunction:
        return DiscreteFunction(box, {x: self(x) for x in box})

    def same_table(self, other: DiscreteFunction) -> bool:
        """Equality as functions on Z^n (boxes may differ by +inf padding)."""
        if self.dim != other.dim:
            return False
        return self.finite_items() == other.finite_items()

    @classmethod
    def from_callable(cls, box: IntegerBox, fn: Callable) -> DiscreteFunction:
        return cls(box, {x: fn(x) for x in box})

    @classmethod
    def indicator(cls, s: LatticeSet, box: IntegerBox | None = None) -> DiscreteFunction:
        box = box or s.bounding_box()
        return cls(box, {x: Fraction(0) if x in s else INF for x in box})

    @classmethod
    def constant(cls, box: IntegerBox, c=0) -> DiscreteFunction:
        return cls(box, {x: c for x in box})
