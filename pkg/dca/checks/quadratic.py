"""Matrix criteria for quadratic functions x^T Q x.

Only the matrix is inspected; build the table with
``dca.ops.quadratic_function`` to cross-check against the table checkers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from dca.errors import DimensionError


@dataclass(frozen=True)
class QuadraticVerdict:
    integrally_convex_sufficient: bool  # a sufficient condition only
    lnat_in_y: bool
    mnat_in_y: bool
    y_block: tuple

    def as_dict(self) -> dict:
        return {
            "integrally-convex (sufficient condition)": self.integrally_convex_sufficient,
            "lnat-in-y": self.lnat_in_y,
            "mnat-in-y": self.mnat_in_y,
        }


def _as_matrix(q) -> list:
    rows = [[Fraction(v) for v in row] for row in q]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise DimensionError(f"quadratic form needs a square matrix, got {n} rows of lengths "
                             f"{[len(r) for r in rows]}")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ValueError(f"matrix is not symmetric: q[{i}][{j}]={rows[i][j]} "
                                 f"but q[{j}][{i}]={rows[j][i]}")
    return rows


def diagonally_dominant(q) -> bool:
    """q_ii >= sum_{j != i} |q_ij| for every row (implies nonnegative diagonals)."""
    n = len(q)
    return all(q[i][i] >= sum(abs(q[i][j]) for j in range(n) if j != i) for i in range(n))


def _submatrix(q, block) -> list:
    return [[q[i][j] for j in block] for i in block]


def classify_quadratic(q, y_block=None) -> QuadraticVerdict:
    q = _as_matrix(q)
    n = len(q)
    block = tuple(range(n)) if y_block is None else tuple(sorted(set(y_block)))
    if any(not 0 <= i < n for i in block):
        raise DimensionError(f"y_block {block} has indices outside 0..{n - 1}")

    qyy = _submatrix(q, block)
    m = len(qyy)
    off_diagonal = [(i, j) for i in range(m) for j in range(m) if i != j]

    lnat = diagonally_dominant(qyy) and all(qyy[i][j] <= 0 for i, j in off_diagonal)
    mnat = all(v >= 0 for row in qyy for v in row) and all(
        qyy[i][j] >= min(qyy[i][k], qyy[j][k])
        for i, j in off_diagonal
        for k in range(m)
        if k not in (i, j)
    )
    return QuadraticVerdict(diagonally_dominant(q), lnat, mnat, block)
