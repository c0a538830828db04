"""Exact integer linear algebra on the lattices N and M.

Vectors are plain tuples of Python ints, so arithmetic never overflows.
Matrices are given as a sequence of columns unless stated otherwise.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import LatticeError

Vector = tuple[int, ...]


def vec(v) -> Vector:
    return tuple(int(x) for x in v)


def pair(u: Sequence[int], v: Sequence[int]) -> int:
    """The pairing <u, v> of M with N (standard dot product)."""
    return sum(a * b for a, b in zip(u, v, strict=True))


def add(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def scale(k: int, v: Sequence[int]) -> Vector:
    return tuple(k * a for a in v)


def neg(v: Sequence[int]) -> Vector:
    return tuple(-a for a in v)


def is_zero(v: Sequence[int]) -> bool:
    return all(a == 0 for a in v)


def primitive(v: Sequence[int]) -> tuple[Vector, int]:
    """Split ``v`` as ``k * p`` with ``p`` primitive and ``k >= 1``.

    The sign of ``v`` is kept, so ``primitive((-3, 3)) == ((-1, 1), 3)``.
    """
    k = 0
    for a in v:
        k = gcd(k, a)
    if k == 0:
        raise LatticeError("zero vector has no primitive direction")
    return tuple(a // k for a in v), k


def multiple_of(d: Sequence[int], u: Sequence[int]) -> int | None:
    """Return the integer ``a`` with ``d == a * u``, or None if there is none.

    ``u`` must be non-zero.
    """
    a = None
    for x, y in zip(d, u, strict=True):
        if y == 0:
            if x != 0:
                return None
            continue
        if x % y:
            return None
        q = x // y
        if a is None:
            a = q
        elif a != q:
            return None
    if a is None:
        raise LatticeError("zero vector has no primitive direction")
    return a


def columns_to_rows(cols: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(cols)
    return [[int(cols[j][i]) for j in range(n)] for i in range(n)]


def determinant(cols: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    a = columns_to_rows(cols)
    n = len(a)
    if any(len(row) != n for row in a):
        raise LatticeError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _inverse_rows(cols: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Rows of the inverse of the column matrix, by Gauss-Jordan over Q."""
    a = [[Fraction(x) for x in row] for row in columns_to_rows(cols)]
    n = len(a)
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            raise LatticeError("matrix is singular")
        a[k], a[piv] = a[piv], a[k]
        inv[k], inv[piv] = inv[piv], inv[k]
        p = a[k][k]
        a[k] = [x / p for x in a[k]]
        inv[k] = [x / p for x in inv[k]]
        for r in range(n):
            if r != k and a[r][k] != 0:
                f = a[r][k]
                a[r] = [x - f * y for x, y in zip(a[r], a[k])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[k])]
    return inv


def _require_unimodular(cols: Sequence[Sequence[int]]) -> None:
    if abs(determinant(cols)) != 1:
        raise LatticeError("cone is not unimodular")


def inverse(cols: Sequence[Sequence[int]]) -> list[Vector]:
    """Inverse of a unimodular matrix, returned as a list of rows."""
    _require_unimodular(cols)
    rows = _inverse_rows(cols)
    return [tuple(int(x) for x in row) for row in rows]


def solve_unimodular(cols: Sequence[Sequence[int]], b: Sequence[int]) -> Vector:
    """Return the integer ``x`` with ``sum(x[j] * cols[j]) == b``."""
    inv = inverse(cols)
    x = tuple(pair(row, b) for row in inv)
    if tuple(sum(x[j] * cols[j][i] for j in range(len(x))) for i in range(len(b))) != tuple(b):
        raise LatticeError("unimodular solve failed substitution check")
    return x


def dual_basis(basis: Sequence[Sequence[int]]) -> list[Vector]:
    """Characters ``u_i`` with ``<u_i, v_j> = delta_ij`` for a unimodular basis ``v``.

    These are the rows of the inverse of the matrix whose columns are the
    ``v_j``; they generate the dual cone of ``cone(v)``.
    """
    return inverse(basis)


def identity(n: int) -> list[Vector]:
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]


def apply(matrix_cols: Sequence[Sequence[int]], v: Sequence[int]) -> Vector:
    """Matrix-vector product for a column-major matrix."""
    n = len(v)
    return tuple(sum(matrix_cols[j][i] * v[j] for j in range(n)) for i in range(len(matrix_cols[0])))


def adjugate_scaled(cols: Sequence[Sequence[int]], others: Sequence[Sequence[int]]) -> list[Vector]:
    """Coordinates of ``others`` in the basis ``cols``, scaled by ``|det(cols)|``.

    Stays integral for non-unimodular (but full-rank) bases, which is what
    the fan-condition check needs when smoothness is not yet established.
    """
    d = determinant(cols)
    if d == 0:
        raise LatticeError("cone is not full-dimensional")
    rows = _inverse_rows(cols)
    s = abs(d)
    out = []
    for w in others:
        coords = [sum(r * x for r, x in zip(row, w)) * s for row in rows]
        out.append(tuple(int(c) for c in coords))
    return out
