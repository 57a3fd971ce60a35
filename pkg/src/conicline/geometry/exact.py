"""Exact coordinates of singular points and the best-effort exact census.

The exact census runs over the rationals, where every intersection point of a
line and a conic, and every point of two conics whose resultant splits into
factors of degree at most two, lives in some field ``Q(sqrt(delta))``. A point
with normalized coordinates outside ``Q`` determines its ``delta`` uniquely,
so points are compared by ``(delta, coordinates)``. Over a larger number field
only pure line arrangements are handled.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm

import flint

from ..errors import ExactUnavailable, SoundnessError
from ..linalg import det
from ..numbers import QQ, AlgebraicElement, NumberField, format_rational
from ..numbers.finite import crt as _crt, rational_reconstruction
from ..numbers.upoly import pgcd, trim
from ..poly import res_wrt, restrict_to_line
from .arrangement import CONIC, LINE, Arrangement
from .census import Census, _cross, assemble

MAX_ATTEMPTS = 20


def format_point(coords):
    out = []
    for c in coords:
        if isinstance(c, AlgebraicElement):
            if c.is_rational():
                out.append(format_rational(c.coords[0]))
            else:
                out.append({"field": c.field.label, "coords": [format_rational(v) for v in c.coords]})
        else:
            out.append(format_rational(Fraction(c)))
    return out


def normalize_exact(pt):
    for c in reversed(pt):
        if c != 0:
            return tuple(v / c for v in pt)
    raise SoundnessError("zero point")


def _on_component(poly, pt) -> bool:
    return poly(*pt) == 0


def attach_exact_coords(arr: Arrangement, c: Census, runs):
    """Fill ``coords`` of points whose exact position is cheap to certify.

    Points on two lines are intersected exactly. Over the rationals, other
    points with a unique signature are lifted from their F_p images by CRT and
    rational reconstruction, then checked on every incident component.
    """
    polys = arr.component_polys()
    field = arr.field
    sigs = [p.signature() for p in c.points]
    for n, pt in enumerate(c.points):
        lines = [i for i in pt.incident if arr.components[i].kind == LINE]
        cand = None
        if len(lines) >= 2:
            u = [field(v) for v in arr.components[lines[0]].coeffs]
            v = [field(w) for w in arr.components[lines[1]].coeffs]
            cand = normalize_exact(_cross(u, v))
        elif field == QQ and sigs.count(sigs[n]) == 1:
            cand = _lift(sigs[n], runs)
        if cand is not None and all(_on_component(polys[i], cand) for i in pt.incident):
            pt.coords = cand


def _lift(sig, runs):
    per_coord = [[], [], []]
    moduli = []
    for points, keys, red in runs:
        idx = [n for n, p in enumerate(points) if p.signature() == sig]
        if len(idx) != 1:
            return None
        key = keys[idx[0]]
        if any(any(x != 0 for x in coord[1:]) for coord in key):
            return None
        for j in range(3):
            per_coord[j].append(key[j][0])
        moduli.append(red.p)
    out = []
    for j in range(3):
        x, n = _crt(per_coord[j], moduli)
        q = rational_reconstruction(x, n)
        if q is None:
            return None
        out.append(q)
    return tuple(out)


# -- quadratic fields ----------------------------------------------------------------

def _squarefree_part(n: int):
    """``n = s^2 * delta`` with delta squarefree; returns (s, delta)."""
    if n == 0:
        return 0, 0
    sign = -1 if n < 0 else 1
    s, delta = 1, sign
    for prime, e in flint.fmpz(abs(n)).factor():
        prime = int(prime)
        s *= prime ** (e // 2)
        if e % 2:
            delta *= prime
    return s, delta


@lru_cache(maxsize=None)
def quadratic_field(delta: int) -> NumberField:
    return NumberField([Fraction(-delta), Fraction(0), Fraction(1)], f"Q(sqrt({delta}))")


def sqrt_rational(q: Fraction):
    """``(field, root)`` with ``root**2 == q``; ``field`` is QQ when q is a square."""
    q = Fraction(q)
    s, delta = _squarefree_part(q.numerator * q.denominator)
    scale = Fraction(s, q.denominator)
    if delta == 1:
        return QQ, scale
    K = quadratic_field(delta)
    return K, K.gen * scale


def _quadratic_roots(a, b, c):
    """Roots of ``a u^2 + b u + c`` (a != 0), each with multiplicity, as (field, root, mult)."""
    disc = b * b - 4 * a * c
    if disc == 0:
        return [(QQ, -b / (2 * a), 2)]
    K, r = sqrt_rational(disc)
    return [(K, (-b + r) / (2 * a), 1), (K, (-b - r) / (2 * a), 1)]


def _binary_roots_q(coeffs_st):
    """Exact roots (field, (s, t), mult) of a binary form over QQ; degree-3+ factors are unsupported."""
    n = len(coeffs_st) - 1
    h = trim([Fraction(v) for v in reversed(coeffs_st)])
    out = []
    at_inf = n - (len(h) - 1)
    if at_inf > 0:
        out.append((QQ, (Fraction(1), Fraction(0)), at_inf))
    if len(h) > 1:
        den = 1
        for v in h:
            den = lcm(den, v.denominator)
        poly = flint.fmpq_poly([int(v * den) for v in h])
        _, factors = poly.factor()
        for fac, mult in factors:
            cs = [Fraction(int(x.p), int(x.q)) if hasattr(x, "p") else Fraction(str(x)) for x in fac.coeffs()]
            deg = len(cs) - 1
            if deg == 1:
                out.append((QQ, (-cs[0] / cs[1], Fraction(1)), mult))
            elif deg == 2:
                for K, r, _m in _quadratic_roots(cs[2], cs[1], cs[0]):
                    out.append((K, (r, K.one if K != QQ else Fraction(1)), mult))
            else:
                raise ExactUnavailable(f"intersection points of degree {deg} over QQ")
    return out


def _key(pt):
    """Canonical (delta, coords) key of a normalized point."""
    norm = normalize_exact(pt)
    if all(not isinstance(v, AlgebraicElement) or v.is_rational() for v in norm):
        return (1, tuple(Fraction(v.coords[0]) if isinstance(v, AlgebraicElement) else Fraction(v) for v in norm))
    K = next(v.field for v in norm if isinstance(v, AlgebraicElement))
    return (int(-K.minpoly[0]), tuple(K(v).coords for v in norm))


def _point_from_key(key):
    delta, coords = key
    if delta == 1:
        return tuple(coords)
    K = quadratic_field(delta)
    return tuple(K(list(c)) for c in coords)


def _lift_to(K, v):
    return K(v) if K != QQ else v


# -- pairwise intersections over QQ ----------------------------------------------------

def _line_conic_q(line, conic_poly):
    lr = restrict_to_line(conic_poly, line)
    if lr.contained:
        raise SoundnessError("a line is contained in a smooth conic")
    pts = []
    for K, (s, t), mult in _binary_roots_q(list(lr.form.coeffs)):
        pt = tuple(_lift_to(K, cs) * s + _lift_to(K, ct) * t for cs, ct in lr.param)
        pts.append((pt, mult))
    return pts


def _conic_conic_q(q1, q2, rng):
    for _ in range(MAX_ATTEMPTS):
        M = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        if det(M) == 0:
            continue
        a, b = q1.substitute(M), q2.substitute(M)
        if a.coeff((2, 0, 0)) == 0 or b.coeff((2, 0, 0)) == 0:
            continue
        R = res_wrt(a, b, 0)
        st = [R.coeff((0, 4 - i, i)) for i in range(5)]
        roots = _binary_roots_q(st)
        pts = []
        ok = True
        for K, (y0, z0), mult in roots:
            zero = K.zero
            ua, ub = [zero] * 3, [zero] * 3
            for (ex, ey, ez), c in a.coeffs.items():
                ua[ex] = ua[ex] + (y0 ** ey) * (z0 ** ez) * c
            for (ex, ey, ez), c in b.coeffs.items():
                ub[ex] = ub[ex] + (y0 ** ey) * (z0 ** ez) * c
            g = pgcd(trim(ua), trim(ub))
            if len(g) != 2:
                ok = False
                break
            x0 = -g[0]
            v = (x0, y0, z0)
            pts.append((tuple(sum((v[j] * M[i][j] for j in range(1, 3)), v[0] * M[i][0]) for i in range(3)), mult))
        if ok:
            return pts
    raise SoundnessError("no separating projection found for a conic pair")


def exact_census(arr: Arrangement, seed: int = 0) -> Census:
    """Census computed over the coefficient field itself.

    Raises :class:`ExactUnavailable` when some intersection point needs a
    field this routine does not handle.
    """
    comps = arr.components
    field = arr.field
    if field != QQ and any(c.kind == CONIC for c in comps):
        raise ExactUnavailable(f"exact census over {field.label} only handles line arrangements")
    rng = random.Random(seed)
    polys = arr.component_polys()
    pair_results = {}
    for i, j in combinations(range(len(comps)), 2):
        ki, kj = comps[i].kind, comps[j].kind
        if ki == LINE and kj == LINE:
            pts = [(_cross([field(v) for v in comps[i].coeffs], [field(v) for v in comps[j].coeffs]), 1)]
        elif ki == LINE:
            pts = _line_conic_q(comps[i].coeffs, polys[j])
        elif kj == LINE:
            pts = _line_conic_q(comps[j].coeffs, polys[i])
        else:
            pts = _conic_conic_q(polys[i], polys[j], rng)
        merged = {}
        for pt, mult in pts:
            key = _key(pt) if field == QQ else (0, tuple(field(v).coords for v in normalize_exact(pt)))
            merged[key] = merged.get(key, 0) + mult
        if sum(merged.values()) != comps[i].degree * comps[j].degree:
            raise SoundnessError(f"Bezout count fails for components {i}, {j}")
        pair_results[(i, j)] = merged
    points, keys, pair_points = assemble(pair_results, comps)
    for pt, key in zip(points, keys):
        pt.coords = _point_from_key(key) if field == QQ else tuple(field(list(c)) for c in key[1])
    return Census(arr.d, arr.k, points, pair_points, mode="exact")
