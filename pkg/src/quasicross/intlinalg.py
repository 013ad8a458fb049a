"""Exact integer linear algebra: extended gcd, left kernels, Hermite normal
form, and fraction-free determinants.

Everything here works on plain Python ints (arbitrary precision), with
matrices as lists of row lists.  The HNF convention used throughout is the
lower-triangular one: row i has its pivot on the diagonal, zeros to the
right of it, and the entries below a pivot are reduced into [0, pivot).
"""

from __future__ import annotations

Matrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with g = gcd(a, b) >= 0 and u*a + v*b = g."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def left_kernel(mat: Matrix) -> Matrix:
    """Basis rows of {z : z * mat = 0} for an integer matrix.

    Row-reduces `mat` while accumulating the unimodular transform; the
    transform rows facing a zero row of the echelon form span the kernel.
    """
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    m = [list(row) for row in mat]
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        u[rank], u[piv] = u[piv], u[rank]
        for i in range(rank + 1, nrows):
            while m[i][col]:
                a, b = m[rank][col], m[i][col]
                if abs(b) >= abs(a):
                    q = b // a
                    m[i] = [x - q * y for x, y in zip(m[i], m[rank])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[rank])]
                else:
                    m[rank], m[i] = m[i], m[rank]
                    u[rank], u[i] = u[i], u[rank]
        rank += 1
    return [u[i] for i in range(rank, nrows)]


def hnf_lower(rows: Matrix) -> Matrix:
    """Lower-triangular Hermite normal form of a full-rank square matrix.

    The result H spans the same row lattice, has H[i][j] = 0 for j > i,
    H[i][i] > 0, and 0 <= H[i][j] < H[j][j] for i > j.  This form is
    unique, so it doubles as a canonical representative of the lattice.
    """
    n = len(rows)
    m = [list(r) for r in rows]
    if any(len(r) != n for r in m):
        raise ValueError("hnf_lower expects a square matrix")
    for c in range(n - 1, -1, -1):
        # fold column c of rows 0..c-1 into row c, leaving the gcd there
        for r in range(c):
            while m[r][c]:
                a, b = m[c][c], m[r][c]
                if a == 0 or abs(b) < abs(a):
                    m[c], m[r] = m[r], m[c]
                    continue
                g, uu, vv = xgcd(a, b)
                fa, fb = a // g, b // g
                new_c = [uu * x + vv * y for x, y in zip(m[c], m[r])]
                new_r = [-fb * x + fa * y for x, y in zip(m[c], m[r])]
                m[c], m[r] = new_c, new_r
        if m[c][c] == 0:
            raise ValueError("matrix is not full rank")
        if m[c][c] < 0:
            m[c] = [-x for x in m[c]]
    for i in range(n):
        for j in range(i - 1, -1, -1):
            q = m[i][j] // m[j][j]
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[j])]
    return m


def reduce_mod_lattice(hnf: Matrix, vector: list[int]) -> tuple[int, ...]:
    """Canonical coset representative of `vector` modulo the lattice
    spanned by a lower-triangular HNF basis.

    The representative lives in the box prod([0, hnf[i][i])), one point
    per coset.
    """
    x = list(vector)
    n = len(hnf)
    for i in range(n - 1, -1, -1):
        d = hnf[i][i]
        if 0 <= x[i] < d:
            continue
        q = x[i] // d
        row = hnf[i]
        for j in range(i + 1):
            x[j] -= q * row[j]
    return tuple(x)


def bareiss_det(rows: Matrix) -> int:
    """Determinant by Bareiss fraction-free elimination (exact)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k]), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
