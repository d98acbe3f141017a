"""Exact dense linear algebra over Z and Q for the small matrices used here."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = Sequence[Sequence[int | Fraction]]


def bareiss_det(M: Matrix) -> int | Fraction:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    if any(len(row) != n for row in A):
        raise ValueError("matrix is not square")
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                # exact division is guaranteed by Sylvester's identity
                A[i][j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def leading_minors(M: Matrix) -> list[int | Fraction]:
    return [bareiss_det([row[:k] for row in M[:k]]) for k in range(1, len(M) + 1)]


def is_negative_definite(M: Matrix) -> bool:
    """Sylvester's criterion: the k-th leading minor has sign (-1)**k."""
    return all((m < 0) if k % 2 else (m > 0) for k, m in enumerate(leading_minors(M), start=1))


def solve(M: Matrix, rhs: Sequence[int | Fraction]) -> list[Fraction]:
    """Solve ``M x = rhs`` exactly; raises ``ValueError`` if ``M`` is singular."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        A[col], A[piv] = A[piv], A[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [A[i][n] for i in range(n)]


def mat_vec(M: Matrix, v: Sequence) -> list:
    return [sum((a * b for a, b in zip(row, v)), 0) for row in M]


def bilinear(M: Matrix, v: Sequence, w: Sequence):
    return sum((vi * x for vi, x in zip(v, mat_vec(M, w))), 0)


def transpose(M: Matrix) -> list[list]:
    return [list(col) for col in zip(*M)]


def mat_mul(A: Matrix, B: Matrix) -> list[list]:
    Bt = transpose(B)
    return [[sum((a * b for a, b in zip(row, col)), 0) for col in Bt] for row in A]


def inertia(M: Matrix) -> tuple[int, int, int]:
    """(positive, negative, zero) counts by symmetric congruence diagonalization."""
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    for i in range(n):
        for j in range(n):
            if A[i][j] != A[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = 0
    active = list(range(n))
    while active:
        k = next((i for i in active if A[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active if i < j and A[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # e_i -> e_i + e_j gives diagonal 2*A[i][j] != 0
            for t in range(n):
                A[i][t] += A[j][t]
            for t in range(n):
                A[t][i] += A[t][j]
            k = i
        d = A[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        for i in active:
            f = A[i][k] / d
            if f:
                for t in range(n):
                    A[i][t] -= f * A[k][t]
                for t in range(n):
                    A[t][i] -= f * A[t][k]
    return pos, neg, n - pos - neg


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def solve_unit_functional(g: Sequence[int]) -> list[int]:
    """Integer vector v with ``sum(g_i v_i) == 1``; needs ``gcd(g) == 1``."""
    v = [0] * len(g)
    acc, idx = 0, []
    coeffs: list[int] = []
    for i, gi in enumerate(g):
        if gi == 0:
            continue
        if not idx:
            acc, coeffs, idx = gi, [1], [i]
            continue
        d, s, t = _xgcd(acc, gi)
        coeffs = [c * s for c in coeffs] + [t]
        idx.append(i)
        acc = d
    if abs(acc) != 1:
        raise ValueError("functional is not primitive")
    for i, c in zip(idx, coeffs):
        v[i] = c * acc  # acc is +-1
    return v


def integer_row_basis(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Z-basis of the row lattice, in Hermite-style echelon form."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    ncols = len(A[0])
    basis = []
    r0 = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(r0, len(A)) if A[i][col] != 0]
            if len(nz) <= 1:
                break
            p = min(nz, key=lambda i: abs(A[i][col]))
            for i in nz:
                if i != p:
                    q = A[i][col] // A[p][col]
                    A[i] = [a - q * b for a, b in zip(A[i], A[p])]
        nz = [i for i in range(r0, len(A)) if A[i][col] != 0]
        if nz:
            p = nz[0]
            A[r0], A[p] = A[p], A[r0]
            if A[r0][col] < 0:
                A[r0] = [-a for a in A[r0]]
            basis.append(A[r0])
            r0 += 1
    return basis


def content(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g
