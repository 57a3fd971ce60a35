"""Number fields ``Q[a]/(minpoly)`` with elements in the power basis."""

from __future__ import annotations

import random
from fractions import Fraction

from ..errors import DivisionByZero, FieldMismatch
from .fields import QQ, format_rational, parse_rational
from .upoly import pderiv, pdivmod, pgcd, pmul, pxgcd


class NumberField:
    """``Q[a]/(minpoly)``; ``minpoly`` is given by ascending rational coefficients.

    Irreducibility is the caller's responsibility. Squarefreeness is checked,
    which is what keeps the power-basis arithmetic well defined modulo the
    primes used later.
    """

    characteristic = 0

    def __init__(self, minpoly, label: str | None = None):
        coeffs = [parse_rational(c) for c in minpoly]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        if coeffs[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        if len(pgcd(coeffs, pderiv(coeffs))) > 1:
            raise ValueError("minimal polynomial is not squarefree")
        self.minpoly = tuple(coeffs)
        self.degree = len(coeffs) - 1
        self.label = label or "QQ[a]/(" + ", ".join(format_rational(c) for c in coeffs) + ")"
        n = self.degree
        self.zero = AlgebraicElement(self, (Fraction(0),) * n)
        self.one = AlgebraicElement(self, (Fraction(1),) + (Fraction(0),) * (n - 1))

    @property
    def gen(self) -> "AlgebraicElement":
        if self.degree == 1:
            return AlgebraicElement(self, (-self.minpoly[0],))
        return AlgebraicElement(self, (Fraction(0), Fraction(1)) + (Fraction(0),) * (self.degree - 2))

    def _reduce(self, coeffs) -> tuple:
        _, r = pdivmod(list(coeffs), list(self.minpoly))
        r = list(r) + [Fraction(0)] * (self.degree - len(r))
        return tuple(Fraction(v) for v in r)

    def __call__(self, x) -> "AlgebraicElement":
        if isinstance(x, AlgebraicElement):
            if x.field != self:
                raise FieldMismatch(f"element of {x.field.label} coerced into {self.label}")
            return x
        if isinstance(x, (int, Fraction, str)):
            q = parse_rational(x) if not isinstance(x, Fraction) else x
            return AlgebraicElement(self, (q,) + (Fraction(0),) * (self.degree - 1))
        if isinstance(x, (list, tuple)):
            return AlgebraicElement(self, self._reduce([parse_rational(v) for v in x]))
        raise TypeError(f"cannot coerce {x!r} into {self.label}")

    def contains(self, x) -> bool:
        return isinstance(x, (int, Fraction)) or (isinstance(x, AlgebraicElement) and x.field == self)

    def random(self, rng: random.Random, bound: int = 9) -> "AlgebraicElement":
        return AlgebraicElement(self, tuple(QQ.random(rng, bound) for _ in range(self.degree)))

    def inverse(self, x):
        return self(x).inverse()

    def __eq__(self, other):
        return isinstance(other, NumberField) and other.minpoly == self.minpoly

    def __hash__(self):
        return hash(("K", self.minpoly))

    def __repr__(self):
        return f"NumberField({self.label})"


class AlgebraicElement:
    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != field.degree:
            raise ValueError(f"expected {field.degree} coordinates, got {len(coords)}")
        self.field = field
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, AlgebraicElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field.label} vs {other.field.label}")
            return other.coords
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) + (Fraction(0),) * (self.field.degree - 1)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraicElement(self.field, (a + b for a, b in zip(self.coords, o)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraicElement(self.field, (a - b for a, b in zip(self.coords, o)))

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        return AlgebraicElement(self.field, (-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraicElement(self.field, (a * other for a in self.coords))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraicElement(self.field, self.field._reduce(pmul(list(self.coords), list(o))))

    __rmul__ = __mul__

    def inverse(self) -> "AlgebraicElement":
        a = list(self.coords)
        while a and a[-1] == 0:
            a.pop()
        if not a:
            raise DivisionByZero(f"inverse of 0 in {self.field.label}")
        g, s, _ = pxgcd(a, list(self.field.minpoly), Fraction(1))
        if len(g) != 1:
            raise DivisionByZero(f"{self!r} is a zero divisor in {self.field.label}")
        return AlgebraicElement(self.field, self.field._reduce(s))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return AlgebraicElement(self.field, (a / other for a in self.coords))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * AlgebraicElement(self.field, o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraicElement(self.field, o) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def __eq__(self, other):
        if isinstance(other, AlgebraicElement):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash(self.coords)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            terms.append(str(c) + (f"*{mono}" if mono else ""))
        return " + ".join(terms) if terms else "0"
