"""Exact rational linear algebra: phase-I simplex and nullspaces."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

Matrix = list[list[Fraction]]


def phase_one(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction] | None:
    """Find x >= 0 with A x = b, or return None if none exists.

    Dense tableau over Fractions with one artificial variable per row and
    Bland's smallest-index rule for both entering and leaving choices, which
    rules out cycling. Artificial columns never re-enter once they leave.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * n
    rows: Matrix = []
    rhs: list[Fraction] = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        bi = Fraction(b[i])
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
        rows.append(row + [Fraction(int(k == i)) for k in range(m)])
        rhs.append(bi)
    width = n + m
    basis = list(range(n, n + m))
    # reduced costs of the phase-I objective sum(artificials)
    cost = [Fraction(0)] * width
    for j in range(n):
        cost[j] = -sum(rows[i][j] for i in range(m))
    while True:
        enter = next((j for j in range(n) if cost[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            # unbounded direction cannot occur: the phase-I objective is bounded below
            raise AssertionError("phase-I simplex reported an unbounded pivot")
        _pivot(rows, rhs, cost, leave, enter)
        basis[leave] = enter
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var >= n and rhs[i] != 0:
            return None
        if var < n:
            x[var] = rhs[i]
    return x


def _pivot(rows: Matrix, rhs: list[Fraction], cost: list[Fraction], r: int, c: int) -> None:
    piv = rows[r][c]
    prow = [v / piv for v in rows[r]]
    rows[r] = prow
    rhs[r] = rhs[r] / piv
    nz = [j for j, v in enumerate(prow) if v]
    for i in range(len(rows)):
        if i == r:
            continue
        f = rows[i][c]
        if f:
            row = rows[i]
            for j in nz:
                row[j] -= f * prow[j]
            rhs[i] -= f * rhs[r]
    f = cost[c]
    if f:
        for j in nz:
            cost[j] -= f * prow[j]


def nullspace(A: Sequence[Sequence[Fraction]], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {y : A y = 0} from the reduced row echelon form.

    Basis vector k sets the k-th free column to 1 and the other free columns
    to 0, so the first vector is determined by the smallest free column.
    """
    rows = [[Fraction(v) for v in r] for r in A]
    n = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        rows[r] = [v / piv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for fc in free:
        y = [Fraction(0)] * n
        y[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            y[pc] = -rows[i][fc]
        basis.append(y)
    return basis
