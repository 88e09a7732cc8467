"""Exact rational dense linear algebra for the span computations.

Matrices are lists of Fraction rows.  `Fraction` keeps entries in lowest
terms after every operation, which controls coefficient growth well
enough at the frame sizes this package reaches (a few hundred columns).
"""

from __future__ import annotations

from fractions import Fraction

Row = list[Fraction]


def rref(rows: list[Row]) -> list[Row]:
    """Reduced row-echelon form; zero rows dropped.  Input not mutated."""
    m = [list(r) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        pr = next((r for r in range(pivot_row, len(m)) if m[r][col]), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        inv = 1 / m[pivot_row][col]
        m[pivot_row] = [x * inv for x in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return [r for r in m[:pivot_row] if any(r)]


def rank(rows: list[Row]) -> int:
    return len(rref(rows))


def nullspace(rows: list[Row], ncols: int) -> list[Row]:
    """Basis of {v : M v = 0} for the matrix with the given rows."""
    red = rref(rows)
    pivots = []
    for r in red:
        pivots.append(next(i for i, x in enumerate(r) if x))
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in zip(red, pivots):
            v[pc] = -r[fc]
        basis.append(v)
    return basis


def in_row_space(v: Row, reduced: list[Row]) -> bool:
    """Membership of v in the row space of an RREF matrix."""
    w = list(v)
    for r in reduced:
        pc = next(i for i, x in enumerate(r) if x)
        if w[pc]:
            f = w[pc]
            w = [a - f * b for a, b in zip(w, r)]
    return not any(w)


def row_space_contains(sub: list[Row], reduced: list[Row]) -> bool:
    return all(in_row_space(r, reduced) for r in sub)


def intersect_row_spaces(a: list[Row], b: list[Row], ncols: int) -> list[Row]:
    """Basis (RREF) of the intersection of two row spaces.

    Solves u^T A = v^T B by a nullspace computation on [A^T | -B^T].
    """
    if not a or not b:
        return []
    na, nb = len(a), len(b)
    stacked = []
    for col in range(ncols):
        stacked.append([a[i][col] for i in range(na)] + [-b[j][col] for j in range(nb)])
    combos = nullspace(stacked, na + nb)
    out = []
    for c in combos:
        vec = [Fraction(0)] * ncols
        for i in range(na):
            if c[i]:
                vec = [x + c[i] * y for x, y in zip(vec, a[i])]
        out.append(vec)
    return rref(out)
