"""Reduction of rationals and number-field elements modulo a prime."""

from __future__ import annotations

from fractions import Fraction

from ..errors import BadPrime
from .factor import ext_roots
from .fields import RationalField
from .finite import ExtField, PrimeField, PrimeFieldElement, is_prime
from .numberfield import AlgebraicElement, NumberField
from .upoly import UniPoly, pderiv, pgcd

CENSUS_DEGREE = 12


def _reduce_rational(q, P: PrimeField) -> PrimeFieldElement:
    q = Fraction(q)
    if q.denominator % P.p == 0:
        raise BadPrime(f"{P.p} divides the denominator of {q}")
    return P(q)


class Reduction:
    """Ring homomorphism from a coefficient field to F_p or F_{p^k}.

    For a number field the generator goes to a root of ``minpoly mod p``. By
    default the root must lie in F_p; with ``extension_degree`` set, roots in
    the canonical F_{p^k} are allowed as well and the target becomes that field.
    """

    def __init__(self, field, p: int, root_choice: int = 0, extension_degree: int | None = None):
        if not is_prime(p):
            raise BadPrime(f"{p} is not prime")
        self.source = field
        self.p = p
        self.prime_field = P = PrimeField(p)
        self.root_choice = root_choice
        if isinstance(field, (RationalField, PrimeField)) or field is None:
            self.target = P
            self.alpha = None
            return
        if not isinstance(field, NumberField):
            raise TypeError(f"cannot reduce elements of {field!r}")
        coeffs = [_reduce_rational(c, P) for c in field.minpoly]
        poly = UniPoly(coeffs, P)
        if len(pgcd(list(poly.coeffs), pderiv(list(poly.coeffs)))) > 1:
            raise BadPrime(f"minimal polynomial is not squarefree modulo {p}")
        roots = ext_roots(poly, 1)
        if roots:
            if not 0 <= root_choice < len(roots):
                raise BadPrime(f"root choice {root_choice} out of range ({len(roots)} roots mod {p})")
            self.target = P
            self.alpha = roots[root_choice][0].coords[0]
            self.alpha = P(self.alpha)
            return
        if extension_degree is None:
            raise BadPrime(f"minimal polynomial has no root modulo {p}")
        roots = ext_roots(poly, extension_degree)
        if not roots:
            raise BadPrime(f"minimal polynomial has no root in F_{p}^{extension_degree}")
        self.target = ExtField.canonical(p, extension_degree)
        self.alpha = roots[root_choice % len(roots)][0]

    def __call__(self, x):
        P = self.prime_field
        if isinstance(x, PrimeFieldElement):
            return x
        if isinstance(x, (int, Fraction)):
            v = _reduce_rational(x, P)
            return v if self.target is P else self.target(v)
        if isinstance(x, AlgebraicElement):
            acc = self.target.zero
            for c in reversed(x.coords):
                acc = acc * self.alpha + _reduce_rational(c, P)
            return acc
        raise TypeError(f"cannot reduce {x!r}")


def reduce_mod_p(x, p: int, root_choice: int = 0) -> PrimeFieldElement:
    """Image of ``x`` in F_p, sending the field generator to the chosen root.

    Roots of the minimal polynomial modulo ``p`` are ordered by their
    representative in ``[0, p)``.

    >>> reduce_mod_p(Fraction(1, 2), 13)
    7 (mod 13)
    """
    field = x.field if isinstance(x, AlgebraicElement) else None
    return Reduction(field, p, root_choice)(x)
