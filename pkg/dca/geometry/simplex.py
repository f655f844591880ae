"""Exact two-phase simplex method with Bland's anti-cycling rule.

Solves  min c.x  s.t.  A x = b, x >= 0  over Fractions. Problems here are
tiny (a few dozen columns), so the tableau is dense and reduced costs are
recomputed from scratch at every step.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

logger = logging.getLogger("dca.geometry")

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple = ()
    objective: Fraction | None = None
    farkas: tuple | None = None  # y with y.A <= 0 and y.b > 0 when infeasible
    pivots: int = 0


class SimplexTableau:
    def __init__(self, a, b):
        self.m = len(a)
        self.n = len(a[0]) if a else 0
        self.signs = [1 if rhs >= 0 else -1 for rhs in b]
        # columns: n structural, m artificial, then the right-hand side
        self.rows = []
        for i, (row, rhs) in enumerate(zip(a, b)):
            s = self.signs[i]
            self.rows.append([Fraction(s * v) for v in row]
                             + [Fraction(int(k == i)) for k in range(self.m)]
                             + [Fraction(s * rhs)])
        self.basis = [self.n + i for i in range(self.m)]
        self.pivots = 0

    def _reduced(self, cost):
        width = self.n + self.m
        cb = [cost[j] for j in self.basis]
        return [cost[j] - sum(cb[i] * self.rows[i][j] for i in range(len(self.rows)))
                for j in range(width)]

    def duals(self, cost):
        """c_B B^-1, read off the artificial columns (B^-1 lives there)."""
        cb = [cost[j] for j in self.basis]
        return [sum(cb[i] * self.rows[i][self.n + k] for i in range(len(self.rows)))
                for k in range(self.m)]

    def pivot(self, i, j):
        self.pivots += 1
        row = self.rows[i]
        piv = row[j]
        self.rows[i] = row = [v / piv for v in row]
        for k, other in enumerate(self.rows):
            if k != i and other[j] != 0:
                f = other[j]
                self.rows[k] = [a - f * b for a, b in zip(other, row)]
        self.basis[i] = j

    def bland_step(self, cost, allowed):
        reduced = self._reduced(cost)
        entering = next((j for j in sorted(allowed) if reduced[j] < 0), None)
        if entering is None:
            return OPTIMAL
        candidates = [(row[-1] / row[entering], self.basis[i], i)
                      for i, row in enumerate(self.rows) if row[entering] > 0]
        if not candidates:
            return UNBOUNDED
        _, _, leaving = min(candidates)
        self.pivot(leaving, entering)
        return None

    def run(self, cost, allowed):
        while True:
            status = self.bland_step(cost, allowed)
            if status is not None:
                return status

    def drive_out_artificials(self):
        """Pivot zero-level artificials out of the basis; drop redundant rows."""
        i = 0
        while i < len(self.rows):
            if self.basis[i] >= self.n:
                j = next((j for j in range(self.n) if self.rows[i][j] != 0), None)
                if j is None:
                    del self.rows[i]
                    del self.basis[i]
                    continue
                self.pivot(i, j)
            i += 1


def solve_lp(a, b, c=None) -> LPResult:
    """Minimise c.x subject to a x = b, x >= 0 (pure feasibility when c is None)."""
    tableau = SimplexTableau(a, b)
    n, m = tableau.n, tableau.m
    phase1 = [Fraction(0)] * n + [Fraction(1)] * m
    tableau.run(phase1, range(n + m))
    infeasibility = sum(row[-1] for row, j in zip(tableau.rows, tableau.basis) if j >= n)
    if infeasibility > 0:
        y = tableau.duals(phase1)
        farkas = tuple(s * v for s, v in zip(tableau.signs, y))
        logger.debug(f"LP infeasible after {tableau.pivots} pivots")
        return LPResult(INFEASIBLE, farkas=farkas, pivots=tableau.pivots)

    tableau.drive_out_artificials()
    cost = [Fraction(v) for v in c] if c is not None else [Fraction(0)] * n
    cost += [Fraction(0)] * m
    status = tableau.run(cost, range(n))
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, pivots=tableau.pivots)
    x = [Fraction(0)] * n
    for row, j in zip(tableau.rows, tableau.basis):
        x[j] = row[-1]
    objective = sum((ci * xi for ci, xi in zip(cost, x)), Fraction(0))
    logger.debug(f"LP optimal after {tableau.pivots} pivots, objective {objective}")
    return LPResult(OPTIMAL, tuple(x), objective, pivots=tableau.pivots)
