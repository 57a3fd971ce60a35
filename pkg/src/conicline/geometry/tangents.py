"""Common tangent lines of two smooth conics.

A line ``a x + b y + c z = 0`` is tangent to the conic with matrix ``A`` iff
``(a, b, c) adj(A) (a, b, c)^T = 0``, so common tangents are the intersection
points of the two dual conics. Each returned line is checked to have contact
order 2 with both conics.
"""

from __future__ import annotations

import random

from ..errors import BadPrime, ExactUnavailable, ValidationError
from ..linalg import det
from ..numbers import QQ, ExtField, Reduction, random_prime
from ..poly import HomPoly, restrict_to_line
from .arrangement import CONIC, Component
from .census import EXT_DEGREE, MAX_PRIME_DRAWS, _conic_conic, _normalize
from .exact import _conic_conic_q, normalize_exact


def adjugate(M):
    def minor(i, j):
        rows = [r for k, r in enumerate(M) if k != i]
        return det([[v for l, v in enumerate(r) if l != j] for r in rows])

    return [[(-1) ** (i + j) * minor(j, i) for j in range(3)] for i in range(3)]


def dual_conic(comp: Component) -> Component:
    """The conic of tangent lines, in the same coefficient order."""
    A = adjugate(comp.matrix())
    return Component(CONIC, (A[0][0], A[1][1], A[2][2], 2 * A[0][1], 2 * A[0][2], 2 * A[1][2]))


def contact_with_line(conic_poly: HomPoly, line) -> int:
    """Contact order of a line with a smooth conic: 1 (secant) or 2 (tangent)."""
    form = restrict_to_line(conic_poly, line).form.coeffs
    a, b, c = form
    return 2 if b * b - 4 * a * c == 0 else 1


def common_tangents(c1: Component, c2: Component, field=QQ, seed: int = 0):
    """Common tangents as ``[(line, multiplicity), ...]``.

    Over the rationals the lines are exact (coefficients in QQ or a quadratic
    field); otherwise they are computed modulo a seeded prime, with
    coefficients in F_{p^12}, and ``exact`` is False in the returned dict.
    """
    if c1.kind != CONIC or c2.kind != CONIC:
        raise ValueError("common tangents need two conics")
    for i, c in enumerate((c1, c2)):
        if det(c.matrix()) == 0:
            raise ValidationError(f"conic {i} is singular")
    coords1 = [field(v) for v in c1.coeffs]
    coords2 = [field(v) for v in c2.coeffs]
    if all(a * coords2[0] == b * coords1[0] for a, b in zip(coords1, coords2)) and all(
        a * b2 == b * a2 for a, b, a2, b2 in zip(coords1, coords2, coords1[1:] + coords1[:1], coords2[1:] + coords2[:1])
    ):
        raise ValidationError("the two conics coincide")
    d1, d2 = dual_conic(c1), dual_conic(c2)
    rng = random.Random(seed)
    if field == QQ:
        try:
            pts = _conic_conic_q(d1.poly(QQ), d2.poly(QQ), rng)
        except ExactUnavailable:
            pass
        else:
            out = []
            for pt, mult in pts:
                line = normalize_exact(pt)
                _verify(line, c1, c2, _common_field(line))
                out.append((line, mult))
            return {"exact": True, "lines": _merge(out)}
    for _ in range(MAX_PRIME_DRAWS):
        p = random_prime(rng)
        try:
            red = Reduction(field, p, 0)
        except BadPrime:
            continue
        P = red.prime_field
        E = ExtField.canonical(p, EXT_DEGREE)
        q1 = d1.poly(field).map_coeffs(red, P)
        q2 = d2.poly(field).map_coeffs(red, P)
        pts = _conic_conic(q1, q2, P, E, rng)
        out = {}
        for pt, mult in pts:
            key = _normalize(pt)
            out[key] = out.get(key, 0) + mult
        lines = []
        for key, mult in sorted(out.items()):
            line = tuple(E(list(c)) for c in key)
            for comp in (c1, c2):
                poly = comp.poly(field).map_coeffs(red, P).map_coeffs(E, E)
                if contact_with_line(poly, line) != 2:
                    raise AssertionError("computed common tangent is not tangent")
            lines.append((line, mult))
        return {"exact": False, "prime": p, "lines": lines}
    raise BadPrime("no usable prime for the tangent computation")


def _common_field(line):
    for v in line:
        if hasattr(v, "field"):
            return v.field
    return QQ


def _verify(line, c1, c2, K):
    for comp in (c1, c2):
        poly = comp.poly(QQ).map_coeffs(K, K) if K != QQ else comp.poly(QQ)
        if contact_with_line(poly, [K(v) if K != QQ else v for v in line]) != 2:
            raise AssertionError("computed common tangent is not tangent")


def _merge(items):
    out = []
    for line, mult in items:
        for n, (other, m) in enumerate(out):
            if other == line:
                out[n] = (other, m + mult)
                break
        else:
            out.append((line, mult))
    return out
