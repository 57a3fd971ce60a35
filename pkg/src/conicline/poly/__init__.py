"""Homogeneous trivariate forms, binary forms and resultants."""

from ..numbers.upoly import UniPoly, resultant
from .hompoly import (
    BinaryForm,
    HomPoly,
    LineRestriction,
    line_parametrization,
    monomial_basis,
    monomial_index,
    partials,
    product,
    res_wrt,
    restrict_to_line,
)

__all__ = [
    "HomPoly",
    "UniPoly",
    "BinaryForm",
    "LineRestriction",
    "monomial_basis",
    "monomial_index",
    "partials",
    "product",
    "restrict_to_line",
    "line_parametrization",
    "resultant",
    "res_wrt",
]
