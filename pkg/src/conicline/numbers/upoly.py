"""Dense univariate polynomials over an exact field.

Coefficient lists are ascending: ``[a0, a1, ..., an]`` stands for
``a0 + a1 X + ... + an X^n`` with ``an != 0``; the zero polynomial is ``[]``.
The list-level helpers take the field as an explicit argument; :class:`UniPoly`
wraps a list together with its field.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import DivisionByZero, FieldMismatch
from ..linalg import det


def trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    return trim(out)


def psub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return trim(out)


def pmul(a, b):
    if not a or not b:
        return []
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return trim(out)


def pscale(a, c):
    return trim([c * v for v in a])


def pdivmod(a, b):
    """Quotient and remainder of ``a`` by nonzero ``b``."""
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    inv = 1 / b[-1]
    db = len(b) - 1
    if len(a) <= db:
        return [], trim(a)
    q = [b[-1] * 0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv
        if c == 0:
            continue
        q[i - db] = c
        for j in range(db + 1):
            a[i - db + j] = a[i - db + j] - c * b[j]
    return trim(q), trim(a[:db])


def prem(a, b):
    return pdivmod(a, b)[1]


def pmonic(a):
    if not a:
        return []
    inv = 1 / a[-1]
    return [v * inv for v in a]


def pgcd(a, b):
    """Monic gcd (``[]`` when both inputs are zero)."""
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, prem(a, b)
    return pmonic(a)


def pxgcd(a, b, one):
    """Return ``(g, s, t)`` with ``s a + t b = g`` and ``g`` monic."""
    r0, r1 = trim(list(a)), trim(list(b))
    s0, s1 = [one], []
    t0, t1 = [], [one]
    while r1:
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1))
        t0, t1 = t1, psub(t0, pmul(q, t1))
    if not r0:
        return [], s0, t0
    inv = 1 / r0[-1]
    return pscale(r0, inv), pscale(s0, inv), pscale(t0, inv)


def pderiv(a):
    return trim([a[i] * i for i in range(1, len(a))])


def ppowmod(base, e: int, mod, one):
    """``base**e mod mod`` by square-and-multiply."""
    result = [one]
    base = prem(base, mod)
    while e:
        if e & 1:
            result = prem(pmul(result, base), mod)
        e >>= 1
        if e:
            base = prem(pmul(base, base), mod)
    return result


def peval(a, x):
    acc = x * 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def sylvester_matrix(f: Sequence, g: Sequence, zero):
    """Sylvester matrix of two coefficient lists taken with their *formal* degrees.

    ``f`` and ``g`` are ascending lists whose last entry may be zero; the
    formal degree is ``len - 1``. Rows are the shifted coefficient vectors in
    descending powers.
    """
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    fd, gd = list(reversed(f)), list(reversed(g))
    rows = []
    for i in range(n):
        rows.append([zero] * i + fd + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gd + [zero] * (size - n - 1 - i))
    return rows


def formal_resultant(f: Sequence, g: Sequence, zero, one):
    """Resultant with formal degrees ``len(f)-1`` and ``len(g)-1``."""
    m, n = len(f) - 1, len(g) - 1
    if m == 0 and n == 0:
        return one
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    return det(sylvester_matrix(f, g, zero))


class UniPoly:
    """A univariate polynomial over a field."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field):
        self.field = field
        self.coeffs = tuple(trim([field(c) for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs, field):
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def x(cls, field):
        return cls._raw((field.zero, field.one), field)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def _other(self, other):
        if isinstance(other, UniPoly):
            if other.field != self.field:
                raise FieldMismatch("polynomials over different fields")
            return list(other.coeffs)
        return trim([self.field(other)])

    def __add__(self, other):
        return UniPoly._raw(padd(list(self.coeffs), self._other(other)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return UniPoly._raw(psub(list(self.coeffs), self._other(other)), self.field)

    def __rsub__(self, other):
        return UniPoly._raw(psub(self._other(other), list(self.coeffs)), self.field)

    def __neg__(self):
        return UniPoly._raw(tuple(-c for c in self.coeffs), self.field)

    def __mul__(self, other):
        return UniPoly._raw(pmul(list(self.coeffs), self._other(other)), self.field)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = UniPoly._raw((self.field.one,), self.field)
        for _ in range(e):
            out = out * self
        return out

    def __divmod__(self, other):
        q, r = pdivmod(list(self.coeffs), self._other(other))
        return UniPoly._raw(q, self.field), UniPoly._raw(r, self.field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        return peval(list(self.coeffs), x) if self.coeffs else self.field.zero

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def monic(self) -> "UniPoly":
        return UniPoly._raw(pmonic(list(self.coeffs)), self.field)

    def derivative(self) -> "UniPoly":
        return UniPoly._raw(pderiv(list(self.coeffs)), self.field)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        return UniPoly._raw(pgcd(list(self.coeffs), self._other(other)), self.field)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if i and c == 1:
                terms.append(mono)
            else:
                terms.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(terms)


def resultant(f: UniPoly, g: UniPoly):
    """Resultant of two nonzero univariate polynomials (Sylvester determinant)."""
    if f.field != g.field:
        raise FieldMismatch("resultant of polynomials over different fields")
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant needs nonzero polynomials")
    return formal_resultant(list(f.coeffs), list(g.coeffs), f.field.zero, f.field.one)
