"""Exact linear algebra.

Two layers live here:

* generic routines (``det``, ``row_reduce``, ``rank``, ``nullspace``) that work
  over any exact field whose elements support ``+ - * /`` and ``== 0``; they are
  used for the small matrices of the geometry code and as independent oracles
  in the tests;
* integer routines backed by FLINT (``IntMatrix``) used for the large Jacobian
  matrices. Rational inputs are scaled to integers first, which never changes
  the rank or the relevant kernel.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

import flint


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact division in fraction-free elimination")
        return q
    return a / b


def det(rows: Sequence[Sequence]):
    """Determinant by fraction-free (Bareiss) elimination.

    Entries may be integers or elements of any exact field; all divisions
    performed are exact.
    """
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    if any(len(r) != n for r in a):
        raise ValueError("det needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return a[k][k] * 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = _exact_div(pivot * row_i[j] - aik * row_k[j], prev)
            row_i[k] = aik * 0
        prev = pivot
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def row_reduce(rows: Sequence[Sequence]):
    """Reduced row echelon form over a field.

    Returns ``(rref, pivots)``; ``rref`` only keeps the nonzero rows.
    """
    a = [list(r) for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(a)):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c] if not isinstance(a[r][c], int) else Fraction(1, a[r][c])
        a[r] = [v * inv for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_reduce(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None):
    """Basis of the right kernel ``{v : A v = 0}`` as a list of vectors."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    rref, pivots = row_reduce(rows) if rows else ([], [])
    one = _one_like(rows)
    zero = one * 0
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][fc]
        basis.append(v)
    return basis


def _one_like(rows):
    for r in rows:
        for v in r:
            return Fraction(1) if isinstance(v, int) else v ** 0
    return Fraction(1)


# -- FLINT-backed integer matrices ---------------------------------------------

def scaled_integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (kernel is unchanged)."""
    out = []
    for r in rows:
        den = 1
        for v in r:
            if isinstance(v, Fraction) and v.denominator != 1:
                den = lcm(den, v.denominator)
        out.append([int(v * den) for v in r])
    return out


class IntMatrix:
    """Thin wrapper over ``flint.fmpz_mat`` with the two queries we need."""

    __slots__ = ("m",)

    def __init__(self, nrows: int, ncols: int, entries=None):
        self.m = flint.fmpz_mat(nrows, ncols)
        if entries:
            for (i, j), v in entries.items():
                self.m[i, j] = v

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        obj = cls.__new__(cls)
        nc = len(rows[0]) if rows else 0
        obj.m = flint.fmpz_mat(rows) if rows and nc else flint.fmpz_mat(len(rows), nc)
        return obj

    @property
    def shape(self):
        return self.m.nrows(), self.m.ncols()

    def nullspace(self) -> list[list[int]]:
        """Integer basis of the right kernel."""
        nr, nc = self.shape
        if nc == 0:
            return []
        if nr == 0:
            return [[1 if i == j else 0 for i in range(nc)] for j in range(nc)]
        x, nullity = self.m.nullspace()
        return [[int(x[i, j]) for i in range(nc)] for j in range(nullity)]

    def nullity(self) -> int:
        nr, nc = self.shape
        if nc == 0:
            return 0
        if nr == 0:
            return nc
        return self.m.nullspace()[1]

    def rank(self) -> int:
        return self.shape[1] - self.nullity()

    def transpose(self) -> "IntMatrix":
        obj = IntMatrix.__new__(IntMatrix)
        obj.m = self.m.transpose()
        return obj
