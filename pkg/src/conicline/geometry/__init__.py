"""Arrangements, validation, singularity census and common tangents."""

from .arrangement import (
    CONIC,
    LINE,
    Arrangement,
    Component,
    from_json_dict,
    load,
    loads,
    validate,
    validation_issues,
)
from .catalog import catalog, expected, names
from .census import (
    NODE,
    OUT,
    TACNODE,
    TRIPLE,
    Census,
    SingularPoint,
    bezout_check,
    census,
    classify_point,
    combinatorial_check,
)
from .exact import exact_census

__all__ = [
    "LINE",
    "CONIC",
    "Arrangement",
    "Component",
    "load",
    "loads",
    "from_json_dict",
    "validate",
    "validation_issues",
    "catalog",
    "expected",
    "names",
    "Census",
    "SingularPoint",
    "census",
    "exact_census",
    "classify_point",
    "combinatorial_check",
    "bezout_check",
    "NODE",
    "TACNODE",
    "TRIPLE",
    "OUT",
]
