"""Exact linear algebra over a :class:`~hopfcalc.field.Field`.

Pivots are chosen as the first nonzero entry in column order, so every
routine here is deterministic.  Over Q the elimination runs on integer
rows (fraction-free, content-reduced) and only the final normalisation
divides by pivots.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .field import Field


def _integer_rows(M):
    rows = []
    for row in M:
        den = lcm(*[Fraction(v).denominator for v in row]) if len(row) else 1
        rows.append([int(Fraction(v) * den) for v in row])
    return rows


def _content_reduce(row):
    g = 0
    for v in row:
        g = gcd(g, v)
    if g > 1:
        row = [v // g for v in row]
    return row


def _rref_rational(M):
    rows = _integer_rows(M)
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        a = rows[r][c]
        for i in range(nrows):
            b = rows[i][c]
            if i != r and b != 0:
                rows[i] = _content_reduce([a * x - b * y for x, y in zip(rows[i], rows[r])])
        pivots.append(c)
        r += 1
    out = np.empty((nrows, ncols), dtype=object)
    for i in range(nrows):
        d = rows[i][pivots[i]] if i < len(pivots) else 1
        for j in range(ncols):
            out[i, j] = Fraction(rows[i][j], d)
    return out, pivots


def _rref_modp(M, p):
    A = np.array(M, dtype=np.int64) % p
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        A = (A - np.outer(col, A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rref(field: Field, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    M = np.asarray(M)
    if M.ndim != 2:
        raise ValueError("rref expects a matrix")
    if M.shape[0] == 0:
        return field.zeros(M.shape), []
    if field.is_rational:
        return _rref_rational(M)
    return _rref_modp(M, field.p)


def rank(field: Field, M) -> int:
    return len(rref(field, M)[1])


def row_basis(field: Field, vectors, dim: int | None = None) -> np.ndarray:
    """Canonical (RREF, zero rows dropped) basis of the span of ``vectors``."""
    vectors = list(vectors)
    if not vectors:
        return field.zeros((0, dim or 0))
    R, piv = rref(field, np.array(vectors, dtype=field.dtype))
    return R[: len(piv)]


def kernel(field: Field, M) -> np.ndarray:
    """Rows form the echelon basis of ``{v : M v = 0}``."""
    M = np.asarray(M)
    ncols = M.shape[1]
    R, piv = rref(field, M)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = field.zeros(ncols)
        v[f] = field(1)
        for i, c in enumerate(piv):
            v[c] = field(-R[i, f])
        basis.append(v)
    if not basis:
        return field.zeros((0, ncols))
    return row_basis(field, basis, ncols)


def inverse(field: Field, M) -> np.ndarray:
    M = np.asarray(M)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    aug = np.concatenate([field.array(M), field.eye(n)], axis=1)
    R, piv = rref(field, aug)
    if piv[:n] != list(range(n)):
        raise np.linalg.LinAlgError("matrix is singular")
    return field.reduce(R[:, n:])


def in_span(field: Field, basis, v) -> bool:
    basis = np.asarray(basis)
    if basis.shape[0] == 0:
        return field.is_zero(v)
    return rank(field, np.vstack([basis, np.asarray(v)[None, :]])) == rank(field, basis)


def same_span(field: Field, a, b) -> bool:
    return field.equal(row_basis(field, a), row_basis(field, b))
