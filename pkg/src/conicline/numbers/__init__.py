"""Exact scalars: rationals, number fields, prime and extension fields."""

from .factor import ext_roots, factor_univariate, is_irreducible
from .fields import QQ, RationalField, format_rational, parse_rational
from .finite import (
    ExtField,
    ExtFieldElement,
    PrimeField,
    PrimeFieldElement,
    is_prime,
    random_prime,
)
from .numberfield import AlgebraicElement, NumberField
from .reduction import Reduction, reduce_mod_p
from .upoly import UniPoly, resultant

__all__ = [
    "QQ",
    "RationalField",
    "parse_rational",
    "format_rational",
    "NumberField",
    "AlgebraicElement",
    "PrimeField",
    "PrimeFieldElement",
    "ExtField",
    "ExtFieldElement",
    "is_prime",
    "random_prime",
    "UniPoly",
    "resultant",
    "factor_univariate",
    "ext_roots",
    "is_irreducible",
    "Reduction",
    "reduce_mod_p",
]
