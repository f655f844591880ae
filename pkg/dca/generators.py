"""Seeded random instances that land in a known class by construction.

Each generator takes a ``random.Random`` so suites are reproducible. Set and
function generators seed a pair of points at infinity-distance 2 whenever the
box has a side of length 2, so their domains span more than one unit cell.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from dca.lattice.function import DiscreteFunction
from dca.lattice.points import IntegerBox, LatticeSet, linf_distance
from dca.lattice.steps import rounded_midpoints
from dca.lattice.values import INF
from dca.ops.sums import minkowski_sum


def random_box(rng: random.Random, dim: int, max_side: int = 2) -> IntegerBox:
    hi = tuple(rng.randint(1, max_side) for _ in range(dim))
    return IntegerBox((0,) * dim, hi)


def convex_sequence(rng: random.Random, length: int, spread: int = 3) -> list:
    """Values whose successive differences are nondecreasing."""
    start = Fraction(rng.randint(-spread, spread))
    slopes = sorted(Fraction(rng.randint(-spread * 2, spread * 2), rng.randint(1, 2)) for _ in range(length - 1))
    values = [start]
    for s in slopes:
        values.append(values[-1] + s)
    return values


def separable_convex(rng: random.Random, box: IntegerBox) -> DiscreteFunction:
    tables = [convex_sequence(rng, hi - lo + 1) for lo, hi in zip(box.lo, box.hi)]
    return DiscreteFunction.from_callable(
        box, lambda x: sum((tables[i][x[i] - box.lo[i]] for i in range(box.dim)), Fraction(0)))


def random_point(rng: random.Random, box: IntegerBox) -> tuple:
    return tuple(rng.randint(lo, hi) for lo, hi in zip(box.lo, box.hi))


def random_points(rng: random.Random, box: IntegerBox, count: int) -> list:
    points = list(box)
    return rng.sample(points, min(count, len(points)))


def far_pair(rng: random.Random, box: IntegerBox) -> tuple:
    """Two box points at infinity-distance at least 2, or a repeated point if no side allows it."""
    x = random_point(rng, box)
    axes = [i for i in range(box.dim) if box.hi[i] - box.lo[i] >= 2]
    if not axes:
        return x, x
    i = rng.choice(axes)
    start = rng.randint(box.lo[i], box.hi[i] - 2)
    y = random_point(rng, box)
    x = x[:i] + (start,) + x[i + 1:]
    y = y[:i] + (start + 2,) + y[i + 1:]
    return x, y


def spans_cells(points) -> bool:
    """True when the bounding box of the points has a side of length 2 or more."""
    points = list(points)
    return any(max(p[i] for p in points) - min(p[i] for p in points) >= 2 for i in range(len(points[0])))


def midpoint_closure(points, box: IntegerBox, mode: str = "lnat") -> LatticeSet:
    """Smallest superset closed under rounded midpoints (all pairs, or far pairs for dmc)."""
    closed = set(tuple(p) for p in points)
    pending = list(itertools.combinations(sorted(closed), 2))
    while pending:
        x, y = pending.pop()
        if mode == "dmc" and linf_distance(x, y) < 2:
            continue
        for m in rounded_midpoints(x, y):
            if m not in closed:
                pending.extend((m, z) for z in closed)
                closed.add(m)
    return LatticeSet(box.dim, frozenset(p for p in closed if p in box))


def _seeds(rng: random.Random, box: IntegerBox, extra: int) -> list:
    return [*far_pair(rng, box), *random_points(rng, box, rng.randint(0, extra))]


def lnat_set(rng: random.Random, box: IntegerBox, seeds: int = 2) -> LatticeSet:
    return midpoint_closure(_seeds(rng, box, seeds), box, "lnat")


def dmc_set(rng: random.Random, box: IntegerBox, seeds: int = 3) -> LatticeSet:
    return midpoint_closure(_seeds(rng, box, seeds), box, "dmc")


def laminar_family(rng: random.Random, dim: int) -> list:
    """Nested prefixes of two halves of a shuffled index list, plus the whole ground set."""
    order = list(range(dim))
    rng.shuffle(order)
    cut = rng.randint(1, dim)
    family = {tuple(sorted(order))}
    for part in (order[:cut], order[cut:]):
        for k in range(2, len(part) + 1):
            if rng.random() < 0.6:
                family.add(tuple(sorted(part[:k])))
    return sorted(family)


def _laminar_bounds(rng: random.Random, box: IntegerBox, family) -> dict:
    """Sum bounds on each member that keep a far pair of the box feasible."""
    x, y = far_pair(rng, box)
    bounds = {}
    for members in family:
        sx, sy = sum(x[i] for i in members), sum(y[i] for i in members)
        bounds[members] = (min(sx, sy) - rng.randint(0, 1), max(sx, sy) + rng.randint(0, 1))
    return bounds


def _laminar_points(box: IntegerBox, bounds: dict) -> frozenset:
    return frozenset(x for x in box
                     if all(lo <= sum(x[i] for i in members) <= hi for members, (lo, hi) in bounds.items()))


def mnat_set(rng: random.Random, box: IntegerBox) -> LatticeSet:
    """Box points whose sums over a laminar family stay within integer bounds (M-natural)."""
    bounds = _laminar_bounds(rng, box, laminar_family(rng, box.dim))
    return LatticeSet(box.dim, _laminar_points(box, bounds))


def boxed_sum_set(rng: random.Random, box: IntegerBox) -> LatticeSet:
    """An L- or M-natural set plus a small box, kept inside ``box``.

    One long side of ``box`` is left unwidened so the inner set still gets its far pair.
    """
    long_axes = [i for i in range(box.dim) if box.hi[i] - box.lo[i] >= 2]
    kept = rng.choice(long_axes) if long_axes else None
    widths = tuple(0 if i == kept else rng.randint(0, min(1, hi - lo))
                   for i, (lo, hi) in enumerate(zip(box.lo, box.hi)))
    inner = IntegerBox(box.lo, tuple(hi - w for hi, w in zip(box.hi, widths)))
    base = lnat_set(rng, inner) if rng.random() < 0.5 else mnat_set(rng, inner)
    return minkowski_sum(base, LatticeSet.from_box(IntegerBox((0,) * box.dim, widths)))


SET_KINDS = {
    "lnat": lnat_set,
    "mnat": mnat_set,
    "dmc": dmc_set,
    "boxed-sum": boxed_sum_set,
}


def integrally_convex_set(rng: random.Random, box: IntegerBox, kind: str | None = None) -> LatticeSet:
    """A set from one of the integrally convex families, chosen at random unless ``kind`` is given."""
    kind = kind or rng.choice(sorted(SET_KINDS))
    return SET_KINDS[kind](rng, box)


def restrict(f, domain: LatticeSet, box: IntegerBox) -> DiscreteFunction:
    return DiscreteFunction.from_callable(box, lambda x: f(x) if x in domain else INF)


def _lnat_table(rng: random.Random, box: IntegerBox):
    """Separable convex plus sum of w_ij (x_i - x_j)^2 with w_ij >= 0, on the whole box."""
    base = separable_convex(rng, box)
    weights = {(i, j): Fraction(rng.randint(0, 2)) for i, j in itertools.combinations(range(box.dim), 2)}
    return lambda x: base(x) + sum((w * (x[i] - x[j]) ** 2 for (i, j), w in weights.items()), Fraction(0))


def lnat_function(rng: random.Random, box: IntegerBox) -> DiscreteFunction:
    """L-natural table restricted to an L-natural set."""
    return restrict(_lnat_table(rng, box), lnat_set(rng, box), box)


def laminar_function(rng: random.Random, box: IntegerBox) -> DiscreteFunction:
    """Separable convex plus convex terms in laminar sums, on the laminar set (M-natural)."""
    family = laminar_family(rng, box.dim)
    domain = LatticeSet(box.dim, _laminar_points(box, _laminar_bounds(rng, box, family)))
    base = separable_convex(rng, box)
    terms = []
    for members in family:
        top = sum(box.hi[i] for i in members)
        terms.append((members, Fraction(rng.randint(0, 2), 2), rng.randint(0, top),
                      Fraction(rng.randint(0, 2)), rng.randint(0, top)))

    def value(x):
        total = base(x)
        for members, c, center, d, kink in terms:
            t = sum(x[i] for i in members)
            total += c * (t - center) ** 2 + d * abs(t - kink)
        return total

    return restrict(value, domain, box)


def dmc_function(rng: random.Random, box: IntegerBox) -> DiscreteFunction:
    """L-natural table restricted to a discrete midpoint convex set: globally midpoint convex."""
    return restrict(_lnat_table(rng, box), dmc_set(rng, box), box)


def separable_on_set(rng: random.Random, box: IntegerBox) -> DiscreteFunction:
    """Separable convex plus the indicator of an integrally convex set."""
    return restrict(separable_convex(rng, box), integrally_convex_set(rng, box), box)


FUNCTION_KINDS = {
    "lnat": lnat_function,
    "laminar": laminar_function,
    "dmc": dmc_function,
    "separable-on-set": separable_on_set,
}


def integrally_convex_function(rng: random.Random, box: IntegerBox, kind: str | None = None) -> DiscreteFunction:
    kind = kind or rng.choice(sorted(FUNCTION_KINDS))
    return FUNCTION_KINDS[kind](rng, box)


def unit_cube_function(rng: random.Random, dim: int) -> DiscreteFunction:
    """Arbitrary values on {0,1}^n: every such function is integrally convex."""
    box = IntegerBox.cube(dim, 0, 1)
    return DiscreteFunction.from_callable(box, lambda x: Fraction(rng.randint(-3, 3)))


def mixed_function(rng: random.Random, box: IntegerBox) -> DiscreteFunction:
    """Any class: random values on a random subset of the box."""
    domain = set(random_points(rng, box, rng.randint(1, box.size)))
    return DiscreteFunction.from_callable(
        box, lambda x: Fraction(rng.randint(-4, 4)) if x in domain else INF)
