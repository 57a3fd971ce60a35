"""Univariate factorization over finite fields and roots in F_{p^k}.

The pipeline is the textbook one: squarefree decomposition, distinct-degree
splitting, then Cantor-Zassenhaus equal-degree splitting with a seeded random
source. It is written against the small field protocol (``zero``, ``one``,
``order``, ``characteristic``, ``random``) so it runs over ``F_p`` and over the
small extension fields used for root finding.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .finite import ExtField, ExtFieldElement, PrimeField
from .upoly import UniPoly, pderiv, pdivmod, pgcd, pmonic, pmul, ppowmod, psub, trim


def _sort_key(item):
    poly, mult = item
    return (len(poly), [int(c.value) if hasattr(c, "value") else c.coords for c in poly], mult)


def _pth_root(a, field):
    """Coefficient-wise p-th root of a polynomial that is a p-th power."""
    p = field.characteristic
    root_exp = field.order // p
    return [c ** root_exp for c in a[::p]]


def squarefree_decomposition(a, field):
    """List of ``(g, i)`` with ``a = lc * prod g^i``, each ``g`` squarefree and monic."""
    a = pmonic(trim(list(a)))
    p = field.characteristic
    out = []
    if len(a) <= 1:
        return out
    da = pderiv(a)
    if not da:
        for g, i in squarefree_decomposition(_pth_root(a, field), field):
            out.append((g, i * p))
        return out
    c = pgcd(a, da)
    w = pdivmod(a, c)[0]
    i = 1
    while len(w) > 1:
        y = pgcd(w, c)
        z = pdivmod(w, y)[0]
        if len(z) > 1:
            out.append((pmonic(z), i))
        i += 1
        w = y
        c = pdivmod(c, y)[0]
    if len(c) > 1:
        for g, j in squarefree_decomposition(_pth_root(c, field), field):
            out.append((g, j * p))
    return out


def distinct_degree(a, field):
    """Split a monic squarefree ``a`` into ``(g_d, d)`` with ``g_d`` the product of its degree-d factors."""
    one = field.one
    x = [field.zero, one]
    out = []
    h = x
    d = 0
    f = list(a)
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = ppowmod(h, field.order, f, one)
        g = pgcd(f, psub(h, x))
        if len(g) > 1:
            out.append((g, d))
            f = pdivmod(f, g)[0]
            h = pdivmod(h, f)[1] if len(f) > 1 else h
    if len(f) > 1:
        out.append((pmonic(f), len(f) - 1))
    return out


def equal_degree(a, d: int, field, rng: random.Random):
    """Factors of degree ``d`` of ``a`` (monic, squarefree, all factors of degree d)."""
    n = len(a) - 1
    if n == d:
        return [list(a)]
    if field.characteristic == 2:
        raise NotImplementedError("equal-degree splitting in characteristic 2")
    one = field.one
    exp = (field.order ** d - 1) // 2
    while True:
        r = trim([field.random(rng) for _ in range(n)])
        if len(r) <= 1:
            continue
        b = psub(ppowmod(r, exp, a, one), [one])
        g = pgcd(a, b)
        if 1 < len(g) < len(a):
            h = pdivmod(a, g)[0]
            return equal_degree(g, d, field, rng) + equal_degree(pmonic(h), d, field, rng)


def factor_list(a, field, rng: random.Random | None = None):
    """Irreducible factorization of a coefficient list: monic factors with multiplicities."""
    rng = rng or random.Random(0)
    out = []
    for g, i in squarefree_decomposition(a, field):
        for gd, d in distinct_degree(g, field):
            for h in equal_degree(gd, d, field, rng):
                out.append((tuple(h), i))
    return out


def factor_univariate(f: UniPoly, rng: random.Random | None = None):
    """Factor ``f`` over its finite field.

    Returns ``[(factor, multiplicity), ...]`` with monic irreducible factors,
    sorted by degree and then by coefficients. The product equals ``f`` up to
    its leading coefficient.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    items = factor_list(list(f.coeffs), f.field, rng)
    items.sort(key=_sort_key)
    return [(UniPoly._raw(g, f.field), i) for g, i in items]


# -- roots in F_{p^k} -------------------------------------------------------------

@lru_cache(maxsize=256)
def subfield_embedding(p: int, k: int, e: int):
    """A copy of F_{p^e} inside the canonical F_{p^k}.

    Returns ``(g, theta)``: ``g`` is a monic irreducible integer polynomial of
    degree ``e`` and ``theta`` one of its roots in ``F_{p^k}``, so that
    ``v -> theta`` embeds ``F_p[v]/(g)`` into the big field.
    """
    if k % e:
        raise ValueError(f"{e} does not divide {k}")
    big = ExtField.canonical(p, k)
    if e == k:
        return tuple(big.modulus), big.gen
    exp = (p ** k - 1) // (p ** e - 1)
    c = 0
    while True:
        theta = (big.gen + c) ** exp  # norm to the degree-e subfield
        conj = [theta]
        for _ in range(e - 1):
            conj.append(conj[-1] ** p)
        if len(set(conj)) == e:
            g = [big.one]
            for r in conj:
                g = pmul(g, [-r, big.one])
            if all(coef.is_prime_field() for coef in g):
                return tuple(coef.coords[0] for coef in g), theta
        c += 1


def _root_in_subfield(g, p: int, k: int, rng):
    """One root in F_{p^k} of a monic irreducible integer polynomial ``g``."""
    e = len(g) - 1
    if e == 1:
        return ExtField.canonical(p, k)(-g[0])
    gmod, theta = subfield_embedding(p, k, e)
    small = ExtField(p, gmod, check=False)
    lifted = [small(c) for c in g]
    linear = equal_degree(pmonic(lifted), 1, small, rng)[0]
    r = -linear[0]
    big = theta.field
    acc = big.zero
    power = big.one
    for c in r.coords:
        if c:
            acc = acc + power * c
        power = power * theta
    return acc


def ext_roots(f: UniPoly, k: int, rng: random.Random | None = None):
    """Roots of ``f`` (over F_p) lying in the canonical F_{p^k}, with multiplicities.

    Only irreducible factors whose degree divides ``k`` contribute. The result is
    sorted by the coordinates of the roots, so it does not depend on ``rng``.
    """
    field = f.field
    if not isinstance(field, PrimeField):
        raise TypeError("ext_roots expects a polynomial over a prime field")
    rng = rng or random.Random(0)
    p = field.p
    out = []
    for g, mult in factor_univariate(f, rng):
        e = g.degree
        if k % e:
            continue
        r = _root_in_subfield([c.value for c in g.coeffs], p, k, rng)
        for _ in range(e):
            out.append((r, mult))
            r = r ** p
    out.sort(key=lambda item: item[0].coords)
    return out


def is_irreducible(g: UniPoly) -> bool:
    """Independent check: ``g`` has no factor of degree ``d <= deg/2`` (gcd with x^{q^d} - x)."""
    field = g.field
    a = pmonic(list(g.coeffs))
    n = len(a) - 1
    if n <= 0:
        return False
    x = [field.zero, field.one]
    h = x
    for _ in range(1, n // 2 + 1):
        h = ppowmod(h, field.order, a, field.one)
        if len(pgcd(a, psub(h, x))) > 1:
            return False
    return True


__all__ = [
    "ExtFieldElement",
    "factor_univariate",
    "ext_roots",
    "is_irreducible",
    "squarefree_decomposition",
    "subfield_embedding",
]
