"""Singularity census by reduction modulo several primes.

For each prime every pair of components is intersected in the common field
F_{p^12} (12 = lcm(1, 2, 3, 4) holds every point of a line-line, line-conic or
conic-conic intersection). Contact orders are root multiplicities of a
restricted form or of a resultant. Points are merged by their normalized
coordinates and classified. All primes must give the same result.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations
from math import comb

from ..errors import (
    BadPrime,
    CensusDisagreement,
    CombinatorialViolation,
    ExactUnavailable,
    PrimeDisagreement,
    SoundnessError,
)
from ..linalg import det
from ..numbers import ExtField, PrimeField, Reduction, UniPoly, ext_roots, random_prime
from ..numbers.upoly import pgcd, trim
from ..poly import HomPoly, res_wrt, restrict_to_line
from .arrangement import CONIC, LINE, Arrangement

EXT_DEGREE = 12
MAX_PRIME_DRAWS = 20
MAX_PROJECTION_ATTEMPTS = 20

NODE = "Node"
TACNODE = "Tacnode"
TRIPLE = "OrdinaryTriple"
OUT = "OutOfClass"

TAU = {NODE: 1, TACNODE: 3, TRIPLE: 4}


@dataclass
class SingularPoint:
    incident: tuple
    contacts: dict  # (i, j) -> contact order
    local_type: str
    label: str = ""
    coords: tuple | None = None  # exact coordinates when known

    @property
    def multiplicity(self) -> int:
        return len(self.incident)

    @property
    def in_class(self) -> bool:
        return self.local_type != OUT

    def signature(self):
        return (self.incident, tuple(sorted(self.contacts.items())))

    def to_json(self):
        from .exact import format_point

        return {
            "type": self.local_type if self.in_class else f"OutOfClass({self.label})",
            "multiplicity": self.multiplicity,
            "incident": list(self.incident),
            "contacts": [[i, j, c] for (i, j), c in sorted(self.contacts.items())],
            "point": format_point(self.coords) if self.coords is not None else None,
        }


@dataclass
class Census:
    d: int
    k: int
    points: list
    pair_points: dict  # (i, j) -> list of (point signature index, contact)
    primes: list = dc_field(default_factory=list)
    mode: str = "modular"
    note: str | None = None

    @property
    def m(self):
        return self.d + 2 * self.k

    @property
    def n2(self):
        return sum(1 for p in self.points if p.local_type == NODE)

    @property
    def t(self):
        return sum(1 for p in self.points if p.local_type == TACNODE)

    @property
    def n3(self):
        return sum(1 for p in self.points if p.local_type == TRIPLE)

    @property
    def counts(self):
        return (self.n2, self.t, self.n3)

    @property
    def in_class(self) -> bool:
        return all(p.in_class for p in self.points)

    @property
    def out_of_class(self):
        return [p for p in self.points if not p.in_class]

    @property
    def tau(self):
        if not self.in_class:
            return None
        return sum(TAU[p.local_type] for p in self.points)

    @property
    def pair_profile(self):
        """(m2, m3, m4): conic pairs meeting in 2, 3 and 4 distinct points."""
        prof = [0, 0, 0]
        for (i, j), pts in self.pair_points.items():
            if i >= self.d and j >= self.d and 2 <= len(pts) <= 4:
                prof[len(pts) - 2] += 1
        return tuple(prof)

    def conic_pair_tacnodes(self) -> int:
        return sum(
            1
            for (i, j), pts in self.pair_points.items()
            if i >= self.d and j >= self.d
            for _, c in pts
            if c == 2
        )

    def signature(self):
        return sorted(p.signature() for p in self.points)

    def to_json(self):
        return {
            "mode": self.mode,
            "n2": self.n2,
            "t": self.t,
            "n3": self.n3,
            "tau": self.tau,
            "in_class": self.in_class,
            "pair_profile": list(self.pair_profile),
            "points": [p.to_json() for p in self.points],
            "note": self.note,
        }


# -- classification of one merged point -------------------------------------------------

def classify_point(incident, contacts, degrees):
    """Local type and a descriptive label for a point on the given components."""
    r = len(incident)
    tangent = any(c >= 2 for c in contacts.values())
    if r == 2:
        (c,) = contacts.values()
        if c == 1:
            return NODE, "node"
        if c == 2:
            return TACNODE, "tacnode"
        return OUT, f"A{2 * c - 1} contact"
    if r == 3:
        if not tangent:
            return TRIPLE, "ordinary triple point"
        return OUT, "non-ordinary triple point"
    name = "quadruple point" if r == 4 else f"{r}-fold point"
    return OUT, ("non-ordinary " if tangent else "ordinary ") + name


# -- per-prime computation -----------------------------------------------------------

def _normalize(pt):
    for c in reversed(pt):
        if c != 0:
            inv = c.inverse()
            return tuple((v * inv).coords for v in pt)
    raise SoundnessError("zero point produced by intersection")


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _binary_roots(coeffs_st, P, E):
    """Roots ``(s, t)`` in E of ``sum c_i s^(n-i) t^i`` with multiplicities."""
    n = len(coeffs_st) - 1
    h = trim(list(reversed(coeffs_st)))  # in u = s/t
    out = []
    at_inf = n - (len(h) - 1)
    if at_inf > 0:
        out.append(((E.one, E.zero), at_inf))
    if len(h) > 1:
        for r, mult in ext_roots(UniPoly._raw(tuple(h), P), EXT_DEGREE):
            out.append(((r, E.one), mult))
    return out


def _line_conic(line, conic_poly, P, E):
    lr = restrict_to_line(conic_poly, line)
    if lr.contained:
        raise SoundnessError("a line is contained in a smooth conic")
    pts = []
    for (s, t), mult in _binary_roots(list(lr.form.coeffs), P, E):
        pt = tuple(E(cs) * s + E(ct) * t for cs, ct in lr.param)
        pts.append((pt, mult))
    return pts


def _apply(M, v):
    return tuple(sum((M[i][j] * v[j] for j in range(1, 3)), M[i][0] * v[0]) for i in range(3))


def _conic_conic(q1: HomPoly, q2: HomPoly, P, E, rng):
    for _ in range(MAX_PROJECTION_ATTEMPTS):
        M = [[P.random(rng) for _ in range(3)] for _ in range(3)]
        if det(M) == 0:
            continue
        a, b = q1.substitute(M), q2.substitute(M)
        if a.coeff((2, 0, 0)) == 0 or b.coeff((2, 0, 0)) == 0:
            continue
        R = res_wrt(a, b, 0)
        if R.is_zero():
            raise SoundnessError("two distinct smooth conics with a common component")
        st = [R.coeff((0, 4 - i, i)) for i in range(5)]  # y^(4-i) z^i
        roots = _binary_roots(st, P, E)
        if sum(m for _, m in roots) != 4:
            continue
        pts = []
        ok = True
        for (y0, z0), mult in roots:
            # both conics restricted to the line through (1:0:0) and (0:y0:z0)
            ua, ub = [E.zero] * 3, [E.zero] * 3
            for (ex, ey, ez), c in a.coeffs.items():
                ua[ex] = ua[ex] + (y0 ** ey) * (z0 ** ez) * c
            for (ex, ey, ez), c in b.coeffs.items():
                ub[ex] = ub[ex] + (y0 ** ey) * (z0 ** ez) * c
            g = pgcd(trim(ua), trim(ub))
            if len(g) != 2:
                ok = False
                break
            x0 = -g[0]
            pts.append((_apply(M, (x0, y0, z0)), mult))
        if ok:
            return pts
    raise SoundnessError("no separating projection found for a conic pair")


def _census_mod_p(arr: Arrangement, red: Reduction, rng: random.Random):
    P = red.prime_field
    E = ExtField.canonical(P.p, EXT_DEGREE)
    polys = [c.poly(arr.field).map_coeffs(red, P) for c in arr.components]
    comps = arr.components
    reduced = [tuple(red(c) for c in comp.coeffs) for comp in comps]
    # a component must stay a smooth conic / nonzero line modulo p
    for i, comp in enumerate(comps):
        if comp.kind == LINE and all(c == 0 for c in reduced[i]):
            raise BadPrime(f"line {i} vanishes modulo {P.p}")
        if comp.kind == CONIC:
            a, b, c, d_, e, f = reduced[i]
            inv2 = P(2).inverse()
            mat = [[a, d_ * inv2, e * inv2], [d_ * inv2, b, f * inv2], [e * inv2, f * inv2, c]]
            if det(mat) == 0:
                raise BadPrime(f"conic {i} degenerates modulo {P.p}")
    for i, j in combinations(range(len(comps)), 2):
        if comps[i].kind == comps[j].kind:
            u, v = reduced[i], reduced[j]
            if all(u[x] * v[y] - u[y] * v[x] == 0 for x in range(len(u)) for y in range(x + 1, len(u))):
                raise BadPrime(f"components {i} and {j} coincide modulo {P.p}")

    pair_results = {}
    for i, j in combinations(range(len(comps)), 2):
        ki, kj = comps[i].kind, comps[j].kind
        if ki == LINE and kj == LINE:
            pt = _cross(reduced[i], reduced[j])
            pts = [(tuple(E(c) for c in pt), 1)]
        elif ki == LINE:
            pts = _line_conic(reduced[i], polys[j], P, E)
        elif kj == LINE:
            pts = _line_conic(reduced[j], polys[i], P, E)
        else:
            pts = _conic_conic(polys[i], polys[j], P, E, rng)
        merged = {}
        for pt, mult in pts:
            key = _normalize(pt)
            merged[key] = merged.get(key, 0) + mult
        total = sum(merged.values())
        if total != comps[i].degree * comps[j].degree:
            raise SoundnessError(f"Bezout count {total} for components {i}, {j}")
        pair_results[(i, j)] = merged

    return assemble(pair_results, comps)


def assemble(pair_results, comps):
    """Merge per-pair intersection points and classify them.

    ``pair_results`` maps a component pair to ``{point key: contact order}``.
    Returns ``(points, keys, pair_points)`` with points sorted by signature.
    """
    table = {}
    for (i, j), merged in pair_results.items():
        for key, c in merged.items():
            entry = table.setdefault(key, {})
            entry[(i, j)] = c
    points = []
    keys = []
    degrees = [c.degree for c in comps]
    for key in sorted(table):
        contacts = table[key]
        incident = tuple(sorted({x for pair in contacts for x in pair}))
        # every pair of incident components meets here
        if len(contacts) != len(incident) * (len(incident) - 1) // 2:
            raise SoundnessError("inconsistent incidence at a merged point")
        ltype, label = classify_point(incident, contacts, degrees)
        points.append(SingularPoint(incident, dict(sorted(contacts.items())), ltype, label))
        keys.append(key)
    order = sorted(range(len(points)), key=lambda n: points[n].signature())
    points = [points[n] for n in order]
    keys = [keys[n] for n in order]
    index = {k: n for n, k in enumerate(keys)}
    pair_points = {pair: [(index[k], c) for k, c in merged.items()] for pair, merged in pair_results.items()}
    return points, keys, pair_points


def census(arr: Arrangement, primes: int = 3, seed: int = 0, exact: bool = False) -> Census:
    """Classify every singular point of the arrangement.

    ``primes`` good primes are drawn from ``(2^20, 2^31)`` with a generator
    seeded by ``seed``; a drawn prime that is bad for the input is discarded
    (at most 20 draws per accepted prime). Results must agree for all primes.
    With ``exact`` the exact census is attempted as well and must agree.
    """
    from .exact import attach_exact_coords, exact_census

    if primes < 1:
        raise ValueError("need at least one prime")
    rng = random.Random(seed)
    runs = []
    used = []
    for _ in range(primes):
        for _draw in range(MAX_PRIME_DRAWS):
            p = random_prime(rng)
            if p in used:
                continue
            try:
                red = Reduction(arr.field, p, 0)
                runs.append(_census_mod_p(arr, red, rng) + (red,))
                used.append(p)
                break
            except BadPrime:
                continue
        else:
            raise BadPrime(f"no good prime found in {MAX_PRIME_DRAWS} draws")
    ref = [pt.signature() for pt in runs[0][0]]
    for run, p in zip(runs[1:], used[1:]):
        sig = [pt.signature() for pt in run[0]]
        if sig != ref:
            raise PrimeDisagreement(f"census modulo {p} differs from census modulo {used[0]}")
        if run[2] != runs[0][2] and _pair_shape(run[2]) != _pair_shape(runs[0][2]):
            raise PrimeDisagreement(f"pair structure modulo {p} differs")
    points, _, pair_points = runs[0][0], runs[0][1], runs[0][2]
    result = Census(arr.d, arr.k, points, pair_points, primes=used)
    attach_exact_coords(arr, result, [(r[0], r[1], r[3]) for r in runs])
    if exact:
        try:
            ex = exact_census(arr)
        except ExactUnavailable as exc:
            result.note = f"exact census unavailable: {exc}"
        else:
            if ex.signature() != result.signature():
                raise CensusDisagreement("exact and modular censuses differ")
            ex.primes = used
            ex.mode = "exact"
            return ex
    return result


def _pair_shape(pair_points):
    return {pair: sorted(c for _, c in pts) for pair, pts in pair_points.items()}


def combinatorial_check(c: Census, d: int, k: int) -> dict:
    """Both sides of the pairwise-intersection count; raises on violation."""
    if not c.in_class:
        raise ValueError("count identity needs an in-class census")
    lhs = 4 * comb(k, 2) + 2 * k * d + comb(d, 2)
    rhs = c.n2 + 2 * c.t + 3 * c.n3
    m = d + 2 * k
    if lhs != rhs or rhs != comb(m, 2) - k:
        raise CombinatorialViolation(
            f"count identity fails: 4C(k,2)+2kd+C(d,2) = {lhs}, n2+2t+3n3 = {rhs}, C(m,2)-k = {comb(m, 2) - k}"
        )
    return {"lhs": lhs, "rhs": rhs, "holds": True}


def bezout_check(c: Census, degrees) -> bool:
    """Contact orders over each component pair sum to the product of degrees."""
    for (i, j), pts in c.pair_points.items():
        if sum(m for _, m in pts) != degrees[i] * degrees[j]:
            return False
    return True
