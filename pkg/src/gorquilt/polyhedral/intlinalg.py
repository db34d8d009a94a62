"""Exact integer and rational linear algebra on plain Python lists.

Matrices are lists of rows of Python ``int`` (or ``Fraction`` where noted);
nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

Matrix = list[list[int]]


def as_matrix(rows) -> Matrix:
    return [[int(v) for v in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(M: Sequence[Sequence]) -> list[list]:
    if not M:
        return []
    return [list(col) for col in zip(*M)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence], x: Sequence) -> list:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def vector_gcd(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = vector_gcd(v)
    if g == 0:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)


def clear_denominators(v: Sequence) -> tuple[int, ...]:
    """Smallest positive integer multiple of a rational vector, made primitive."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    return primitive([int(Fraction(x) * den) for x in v])


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U @ M @ V == D``.

    ``U`` and ``V`` are unimodular and ``D`` is diagonal with nonnegative
    entries, each dividing the next.
    """
    A = as_matrix(M)
    m = len(A)
    n = len(A[0]) if m else 0
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):
        # row[dst] += k * row[src]
        if k:
            A[dst] = [a + k * b for a, b in zip(A[dst], A[src])]
            U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, k):
        if k:
            for row in A:
                row[dst] += k * row[src]
            for row in V:
                row[dst] += k * row[src]

    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero absolute value in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // p))
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // p))
                    if A[t][j]:
                        dirty = True
            if dirty:
                # move the smallest remainder in row/column t to the pivot
                best = (t, t)
                for i in range(t + 1, m):
                    if A[i][t] and abs(A[i][t]) < abs(A[best[0]][best[1]]):
                        best = (i, t)
                for j in range(t + 1, n):
                    if A[t][j] and abs(A[t][j]) < abs(A[best[0]][best[1]]):
                        best = (t, j)
                swap_rows(t, best[0])
                swap_cols(t, best[1])
                continue
            # divisibility of the rest of the block by the pivot
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return U, A, V


def invariant_factors(M: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form."""
    _, D, _ = smith_normal_form(M)
    out = []
    for i in range(min(len(D), len(D[0]) if D else 0)):
        if D[i][i]:
            out.append(D[i][i])
    return out


def cokernel(M: Sequence[Sequence[int]], nrows: Optional[int] = None) -> tuple[list[int], int]:
    """Structure of ``Z^rows / M Z^cols`` as (torsion factors > 1, free rank)."""
    rows = len(M) if nrows is None else nrows
    if rows == 0:
        return [], 0
    if not M or not M[0]:
        return [], rows
    inv = invariant_factors(M)
    return [d for d in inv if d > 1], rows - len(inv)


def integer_kernel(M: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    """Z-basis of ``{z : M z = 0}`` as columns of the returned ``ncols x k`` matrix."""
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    if not M:
        return identity(n)
    _, D, V = smith_normal_form(M)
    r = sum(1 for i in range(min(len(D), n)) if D[i][i])
    return [row[r:] for row in V]


def solve_integral(M: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[list[int]]:
    """Some integer ``x`` with ``M x == b``, or ``None`` if none exists."""
    m = len(M)
    n = len(M[0]) if m else 0
    if m == 0:
        return [0] * n
    U, D, V = smith_normal_form(M)
    c = matvec(U, b)
    y = [0] * n
    for i in range(m):
        d = D[i][i] if i < n else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d:
                return None
            y[i] = c[i] // d
    return matvec(V, y)


def rref(M: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    A = [[Fraction(v) for v in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [v * inv for v in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A[:r], pivots


def rank(M: Sequence[Sequence]) -> int:
    if not M:
        return 0
    return len(rref(M)[1])


def rational_nullspace(M: Sequence[Sequence], ncols: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of the rational nullspace of ``M``."""
    if not M:
        return [tuple(1 if i == j else 0 for i in range(ncols)) for j in range(ncols)]
    R, piv = rref(M)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, piv):
            v[p] = -row[f]
        basis.append(clear_denominators(v))
    return basis


def solve_rational(M: Sequence[Sequence], b: Sequence) -> Optional[list[Fraction]]:
    """A rational solution of ``M x = b`` (free variables set to 0) or ``None``."""
    n = len(M[0]) if M else 0
    aug = [list(row) + [bb] for row, bb in zip(M, b)]
    R, piv = rref(aug)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(R, piv):
        x[p] = row[n]
    return x


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant."""
    A = as_matrix(M)
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            p = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if p is None:
                return 0
            A[k], A[p] = A[p], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def inverse(M: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(M)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in R]


def hermite_columns(B: Sequence[Sequence[int]]) -> Matrix:
    """Column-style Hermite normal form of a full-column-rank ``N x r`` basis.

    The returned basis spans the same lattice; its columns are in echelon
    form with positive pivots and reduced entries to the left of each pivot.
    """
    if not B or not B[0]:
        return [list(row) for row in B]
    # row-style HNF of the transpose, then transpose back
    A = transpose(as_matrix(B))
    m = len(A)
    n = len(A[0])
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[p] = A[p], A[r]
            done = True
            for i in range(r + 1, m):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    if A[i][c]:
                        done = False
            if done:
                break
        if r < m and A[r][c]:
            if A[r][c] < 0:
                A[r] = [-a for a in A[r]]
            for i in range(r):
                q = A[i][c] // A[r][c]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
            r += 1
    return transpose(A[:r]) if r else [[] for _ in range(n)]
