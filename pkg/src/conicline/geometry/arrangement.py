"""Arrangements of lines and smooth conics, validation, and the JSON format.

File format (all rationals written as ``"num/den"``)::

    {"name": "...",
     "field": {"minpoly": ["-3/1", "0/1", "1/1"], "label": "Q(sqrt3)"},
     "lines":  [[a, b, c], ...],                  # a x + b y + c z
     "conics": [[a, b, c, d, e, f], ...]}         # a x² + b y² + c z² + d xy + e xz + f yz

Over a number field of degree n > 1 a coefficient may also be a list of n
rationals, its coordinates in the power basis ``1, a, ..., a^(n-1)``.
A degree-one minimal polynomial (e.g. ``["0/1", "1/1"]``) means the rationals.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ..errors import (
    ArrangementFormatError,
    DuplicateComponent,
    SingularConic,
    ValidationError,
    ZeroComponent,
)
from ..linalg import det
from ..numbers import QQ, AlgebraicElement, NumberField, format_rational, parse_rational
from ..poly import HomPoly, product

LINE = "line"
CONIC = "conic"


@dataclass(frozen=True)
class Component:
    kind: str
    coeffs: tuple

    @property
    def degree(self) -> int:
        return 1 if self.kind == LINE else 2

    def poly(self, field) -> HomPoly:
        if self.kind == LINE:
            return HomPoly.linear(*self.coeffs, field=field)
        return HomPoly.conic(self.coeffs, field)

    def matrix(self):
        """Symmetric 3x3 matrix of a conic (off-diagonal entries halved)."""
        if self.kind != CONIC:
            raise ValueError("only conics have a matrix")
        a, b, c, d, e, f = (Fraction(v) if isinstance(v, int) else v for v in self.coeffs)
        return [[a, d / 2, e / 2], [d / 2, b, f / 2], [e / 2, f / 2, c]]


def field_from_minpoly(minpoly, label=None):
    coeffs = [parse_rational(c) for c in minpoly]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) == 2 and coeffs[1] == 1:
        return QQ
    return NumberField(coeffs, label)


class Arrangement:
    """Lines first, then conics, in the order given."""

    def __init__(self, field, lines=(), conics=(), name: str | None = None):
        self.field = field
        comps = [Component(LINE, tuple(field(c) for c in l)) for l in lines]
        comps += [Component(CONIC, tuple(field(c) for c in q)) for q in conics]
        self.components = tuple(comps)
        self.name = name

    @property
    def d(self) -> int:
        return sum(1 for c in self.components if c.kind == LINE)

    @property
    def k(self) -> int:
        return sum(1 for c in self.components if c.kind == CONIC)

    @property
    def m(self) -> int:
        return self.d + 2 * self.k

    @property
    def lines(self):
        return [c for c in self.components if c.kind == LINE]

    @property
    def conics(self):
        return [c for c in self.components if c.kind == CONIC]

    def component_polys(self):
        return [c.poly(self.field) for c in self.components]

    def polynomial(self) -> HomPoly:
        return product(self.component_polys(), self.field)

    def has_rational_product(self) -> bool:
        f = self.polynomial()
        return all(not isinstance(c, AlgebraicElement) or c.is_rational() for c in f.coeffs.values())

    def to_json_dict(self) -> dict:
        field = self.field
        if field == QQ:
            fjson = {"minpoly": ["0/1", "1/1"], "label": "QQ"}
        else:
            fjson = {"minpoly": [format_rational(c) for c in field.minpoly], "label": field.label}
        return {
            "name": self.name or "",
            "field": fjson,
            "lines": [[_dump_scalar(c) for c in comp.coeffs] for comp in self.lines],
            "conics": [[_dump_scalar(c) for c in comp.coeffs] for comp in self.conics],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    def digest(self) -> str:
        """sha256 of the canonical (compact, sorted) JSON form."""
        blob = json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def __repr__(self):
        return f"Arrangement({self.name!r}, d={self.d}, k={self.k}, field={self.field!r})"


def _dump_scalar(c):
    if isinstance(c, AlgebraicElement):
        if c.is_rational():
            return format_rational(c.coords[0])
        return [format_rational(v) for v in c.coords]
    return format_rational(Fraction(c))


def _load_scalar(raw, field, where):
    try:
        if isinstance(raw, list):
            if field == QQ:
                if len(raw) != 1:
                    raise ValueError("power-basis list over QQ must have one entry")
                return parse_rational(raw[0])
            if len(raw) != field.degree:
                raise ValueError(f"expected {field.degree} power-basis coordinates")
            return field([parse_rational(v) for v in raw])
        if isinstance(raw, bool) or not isinstance(raw, (int, str)):
            raise ValueError(f"bad coefficient {raw!r}")
        return field(parse_rational(raw))
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ArrangementFormatError(f"{where}: {exc}") from exc


def from_json_dict(data) -> Arrangement:
    problems = []
    if not isinstance(data, dict):
        raise ArrangementFormatError("top level must be a JSON object")
    for key in ("field", "lines", "conics"):
        if key not in data:
            problems.append(f"missing key {key!r}")
    if problems:
        raise ArrangementFormatError("; ".join(problems), [ArrangementFormatError(p) for p in problems])
    fdata = data["field"]
    try:
        if not isinstance(fdata, dict) or "minpoly" not in fdata:
            raise ValueError("field must be an object with a 'minpoly' list")
        field = field_from_minpoly(fdata["minpoly"], fdata.get("label"))
    except (ValueError, TypeError) as exc:
        raise ArrangementFormatError(f"field: {exc}") from exc
    lines, conics = [], []
    issues = []
    for kind, size, raw_list, out in (("lines", 3, data["lines"], lines), ("conics", 6, data["conics"], conics)):
        if not isinstance(raw_list, list):
            issues.append(ArrangementFormatError(f"{kind} must be a list"))
            continue
        for i, raw in enumerate(raw_list):
            if not isinstance(raw, list) or len(raw) != size:
                issues.append(ArrangementFormatError(f"{kind}[{i}]: expected {size} coefficients"))
                continue
            try:
                out.append([_load_scalar(v, field, f"{kind}[{i}][{j}]") for j, v in enumerate(raw)])
            except ArrangementFormatError as exc:
                issues.append(exc)
    if issues:
        raise ArrangementFormatError("; ".join(str(e) for e in issues), issues)
    name = data.get("name")
    return Arrangement(field, lines, conics, name=name if isinstance(name, str) else None)


def loads(text: str) -> Arrangement:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArrangementFormatError(f"invalid JSON: {exc}") from exc
    return from_json_dict(data)


def load(path) -> Arrangement:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ArrangementFormatError(f"cannot read {path}: {exc}") from exc
    return loads(text)


# -- validation -----------------------------------------------------------------------

def _proportional(u, v) -> bool:
    return all(u[i] * v[j] - u[j] * v[i] == 0 for i, j in combinations(range(len(u)), 2))


def validation_issues(arr: Arrangement) -> list:
    issues = []
    for i, comp in enumerate(arr.components):
        if all(c == 0 for c in comp.coeffs):
            issues.append(ZeroComponent(i))
        elif comp.kind == CONIC and det(comp.matrix()) == 0:
            issues.append(SingularConic(i))
    zero = {e.index for e in issues if isinstance(e, ZeroComponent)}
    for i, j in combinations(range(len(arr.components)), 2):
        a, b = arr.components[i], arr.components[j]
        if i in zero or j in zero or a.kind != b.kind:
            continue
        if _proportional(a.coeffs, b.coeffs):
            issues.append(DuplicateComponent(i, j))
    return issues


def validate(arr: Arrangement) -> Arrangement:
    """Raise the first problem found (with every problem in ``.issues``)."""
    issues = validation_issues(arr)
    if issues:
        first = issues[0]
        first.issues = issues
        raise first
    if arr.m < 1:
        raise ValidationError("empty arrangement")
    return arr
