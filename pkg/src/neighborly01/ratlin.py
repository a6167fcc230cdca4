"""Exact rational linear algebra over 0/1 points.

Affine rank by fraction-free Gaussian elimination and cone membership by
an exact phase-1 simplex (Bland's rule, `fractions.Fraction` tableau).
Instances are tiny (at most 16 variables, a few dozen generators), so
exactness costs little and removes any tolerance policy.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cube import decode_point


def affine_rank(points: Sequence[int], d: int) -> int:
    """Dimension of the affine hull of 0/1 points (given as values)."""
    if not points:
        raise ValueError("affine_rank of an empty point set")
    base = decode_point(points[0], d)
    rows = []
    for v in points[1:]:
        c = decode_point(v, d)
        rows.append([c[i] - base[i] for i in range(d)])
    return integer_rank(rows)


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix (Bareiss elimination)."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, nrows):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        for r in range(row + 1, nrows):
            for c in range(col + 1, ncols):
                m[r][c] = (m[row][col] * m[r][c] - m[r][col] * m[row][c]) // prev
            m[r][col] = 0
        prev = m[row][col]
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def cone_member(generators: Sequence[int], y: int, d: int) -> bool:
    """Is y a nonnegative rational combination of the generators?"""
    return cone_combination(generators, y, d) is not None


def cone_combination(generators: Sequence[int], y: int, d: int) -> list[Fraction] | None:
    """Witness coefficients for y in cone(Z), or None.

    Returns one lambda per input generator (zeros for generators that
    cannot participate).  Zero generators are allowed and pinned to 0.
    """
    for z in generators:
        if not 0 <= z < (1 << d):
            raise ValueError(f"generator {z} out of range for d={d}")
    if not 0 <= y < (1 << d):
        raise ValueError(f"target {y} out of range for d={d}")
    lambdas = [Fraction(0)] * len(generators)
    if y == 0:
        return lambdas
    # A generator with a 1 outside supp(y) is forced to 0 (all terms are
    # nonnegative), so only dominated generators and supp(y) rows remain.
    support = [i for i in range(d) if (y >> (d - 1 - i)) & 1]
    active = [j for j, z in enumerate(generators) if z != 0 and (z & y) == z]
    if not active:
        return None
    covered = 0
    for j in active:
        covered |= generators[j]
    if covered != y:
        return None
    cols = [decode_point(generators[j], d) for j in active]
    a = [[Fraction(cols[jj][i]) for jj in range(len(active))] for i in support]
    sol = _phase1_simplex(a)
    if sol is None:
        return None
    for jj, j in enumerate(active):
        lambdas[j] = sol[jj]
    return lambdas


def _phase1_simplex(a: list[list[Fraction]]) -> list[Fraction] | None:
    """Solve {A x = 1, x >= 0} exactly; returns x or None if infeasible.

    Phase-1 with one artificial variable per row and Bland's rule, which
    guarantees termination without any tie-breaking subtleties.
    """
    nrows = len(a)
    ncols = len(a[0])
    one = Fraction(1)
    # tableau rows: [A | I | b], basis starts as the artificials
    tab = [a[i] + [one if k == i else Fraction(0) for k in range(nrows)] + [one]
           for i in range(nrows)]
    basis = [ncols + i for i in range(nrows)]
    total = ncols + nrows
    # objective: minimize sum of artificials; reduced-cost row = c - sum of
    # basic rows, so basic artificial columns start at cost 1 - 1 = 0
    obj = [Fraction(0)] * (total + 1)
    for i in range(nrows):
        for k in range(total + 1):
            obj[k] -= tab[i][k]
    for i in range(nrows):
        obj[ncols + i] += 1
    while True:
        enter = -1
        for j in range(total):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(nrows):
            if tab[i][enter] > 0:
                ratio = tab[i][total] / tab[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            # minimization of a sum of nonnegatives is never unbounded
            raise ArithmeticError("unbounded phase-1 objective")
        _pivot(tab, obj, basis, leave, enter, total)
    if -obj[total] != 0:
        return None
    x = [Fraction(0)] * ncols
    for i, b in enumerate(basis):
        if b < ncols:
            x[b] = tab[i][total]
    return x


def _pivot(tab, obj, basis, row: int, col: int, total: int) -> None:
    piv = tab[row][col]
    tab[row] = [v / piv for v in tab[row]]
    for i in range(len(tab)):
        if i != row and tab[i][col] != 0:
            f = tab[i][col]
            tab[i] = [tab[i][k] - f * tab[row][k] for k in range(total + 1)]
    if obj[col] != 0:
        f = obj[col]
        for k in range(total + 1):
            obj[k] -= f * tab[row][k]
    basis[row] = col
