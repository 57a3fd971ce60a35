"""The rational field and the small protocol all coefficient fields follow.

Every field object exposes ``zero``, ``one``, ``characteristic``, a call
operator that coerces integers (and elements of subfields) into the field, and
``random(rng)``. Elements are immutable and support ``+ - * /``, ``**``, unary
minus, equality and hashing.

Rationals are plain :class:`fractions.Fraction` values.
"""

from __future__ import annotations

import random
from fractions import Fraction

from ..errors import DivisionByZero


def parse_rational(text) -> Fraction:
    """Parse ``"num/den"``, ``"num"`` or an int into a Fraction.

    >>> parse_rational("-3/6")
    Fraction(-1, 2)
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if isinstance(text, str):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {text!r}") from exc
    raise TypeError(f"cannot read {text!r} as a rational number")


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


class RationalField:
    """The field of rational numbers, with Fraction elements."""

    characteristic = 0
    degree = 1
    label = "QQ"

    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return parse_rational(x)
        coords = getattr(x, "coords", None)
        if coords is not None and all(c == 0 for c in coords[1:]):
            return Fraction(coords[0])
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def contains(self, x) -> bool:
        return isinstance(x, (int, Fraction))

    def random(self, rng: random.Random, bound: int = 9) -> Fraction:
        num = rng.randint(-bound, bound)
        den = rng.randint(1, bound)
        return Fraction(num, den)

    def inverse(self, x: Fraction) -> Fraction:
        if x == 0:
            raise DivisionByZero("inverse of 0 in QQ")
        return 1 / Fraction(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()
