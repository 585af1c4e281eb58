"""Exact integer and rational linear algebra on small dense matrices.

Matrices are lists of rows. Everything here works over ``int`` and
``fractions.Fraction`` only; sizes in this package never exceed a few dozen
rows, so plain Python loops are fine.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence]) -> list[list]:
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(m: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError(f"length mismatch {len(u)} != {len(v)}")
    return sum(x * y for x, y in zip(u, v))


def determinant(m: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def principal_minors(m: Sequence[Sequence]) -> list[Fraction]:
    n = len(m)
    out = []
    for k in range(1, n + 1):
        for idx in combinations(range(n), k):
            out.append(determinant([[m[i][j] for j in idx] for i in idx]))
    return out


def rank(m: Sequence[Sequence]) -> int:
    return len(_rref(m)[1])


def _rref(m: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    a = [[Fraction(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Unique rational solution of ``a x = b``.

    Raises ``ValueError`` when the system is inconsistent or underdetermined.
    """
    n = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = _rref(aug)
    if n in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) != n:
        raise ValueError("linear system has no unique solution")
    return [red[i][n] for i in range(n)]


def inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(m)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    red, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red[:n]]


def common_denominator(values) -> int:
    return lcm(1, *(Fraction(v).denominator for v in values))


def primitive(v: Sequence[int]) -> list[int]:
    g = gcd(*v)
    return [x // g for x in v] if g else list(v)


def hermite_rows(m: Sequence[Sequence[int]]) -> Matrix:
    """Row-style Hermite normal form of the lattice spanned by the rows.

    Zero rows are dropped; pivots are positive and entries above each pivot
    are reduced into ``[0, pivot)``. The result is a canonical basis of the
    row lattice.
    """
    a = [list(map(int, row)) for row in m if any(row)]
    if not a:
        return []
    cols = len(a[0])
    out: Matrix = []
    r = 0
    for c in range(cols):
        # Euclid on column c among rows r..end
        while True:
            nz = [i for i in range(r, len(a)) if a[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[piv] = a[piv], a[r]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if r < len(a) and a[r][c] != 0:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
            if r == len(a):
                break
    out = [row for row in a[:r]]
    return out


def integer_kernel(m: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Basis (as rows, Hermite-reduced) of ``{x in Z^n : m x = 0}``.

    The kernel of an integer matrix is saturated, so any integral basis of the
    rational kernel's lattice of integer points works; we get one from the
    column-operation transform that brings ``m`` to echelon form.
    """
    if ncols is None:
        ncols = len(m[0]) if m else 0
    if not m:
        return identity(ncols)
    # Column-reduce m by working on rows of [m^T | I].
    mt = transpose(m)
    aug = [list(row) + e for row, e in zip(mt, identity(ncols))]
    k = len(m)
    r = 0
    for c in range(k):
        while True:
            nz = [i for i in range(r, ncols) if aug[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(aug[i][c]))
            aug[r], aug[piv] = aug[piv], aug[r]
            done = True
            for i in range(r + 1, ncols):
                if aug[i][c]:
                    q = aug[i][c] // aug[r][c]
                    aug[i] = [x - q * y for x, y in zip(aug[i], aug[r])]
                    if aug[i][c]:
                        done = False
            if done:
                break
        if r < ncols and aug[r][c] != 0:
            r += 1
    basis = [row[k:] for row in aug[r:]]
    return hermite_rows(basis)


def smith_normal_form(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(d, u, v)`` with ``u m v = d`` diagonal, ``u``, ``v`` unimodular.

    Diagonal entries are non-negative and each divides the next.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(map(int, row)) for row in m]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for row in a:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    t = 0
    while t < min(rows, cols):
        entries = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            clean = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        clean = False
            if clean:
                # divisibility of the remaining block
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                     if a[i][j] % a[t][t]),
                    None,
                )
                if bad is None:
                    break
                add_row(t, bad[0], 1)
                continue
            entries = [(abs(a[i][t]), i, 'r') for i in range(t, rows) if a[i][t]]
            entries += [(abs(a[t][j]), j, 'c') for j in range(t, cols) if a[t][j]]
            _, k, kind = min(entries)
            if kind == 'r':
                swap_rows(t, k)
            else:
                swap_cols(t, k)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return a, u, v


def integral_coordinates(basis: Sequence[Sequence[int]], vec: Sequence) -> list[Fraction]:
    """Rational coordinates of ``vec`` in the row ``basis`` (must be unique)."""
    return solve(transpose(basis), list(vec))
