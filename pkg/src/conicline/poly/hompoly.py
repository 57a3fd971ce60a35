"""Homogeneous polynomials in x, y, z.

Monomials are exponent triples ``(a, b, c)`` standing for ``x^a y^b z^c``. The
fixed order on each graded piece is graded lex with ``x > y > z``; see
:func:`monomial_basis`.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from ..errors import FieldMismatch
from ..numbers.upoly import formal_resultant

VARS = ("x", "y", "z")


@lru_cache(maxsize=None)
def monomial_basis(r: int) -> tuple:
    """Exponent triples of degree ``r``: a descending, then b descending.

    >>> monomial_basis(1)
    ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    """
    if r < 0:
        raise ValueError("degree must be non-negative")
    return tuple((a, b, r - a - b) for a in range(r, -1, -1) for b in range(r - a, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(r: int) -> dict:
    return {e: i for i, e in enumerate(monomial_basis(r))}


def _add_exp(e1, e2):
    return (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])


class HomPoly:
    """A homogeneous polynomial with coefficients in ``field``.

    Zero coefficients are never stored. The zero polynomial keeps a nominal
    degree so that graded bookkeeping still works.
    """

    __slots__ = ("coeffs", "deg", "field")

    def __init__(self, coeffs: dict, deg: int, field):
        clean = {}
        for e, c in coeffs.items():
            e = tuple(e)
            if len(e) != 3 or sum(e) != deg or min(e) < 0:
                raise ValueError(f"exponent {e} is not of degree {deg}")
            c = field(c)
            if c != 0:
                clean[e] = c
        self.coeffs = clean
        self.deg = deg
        self.field = field

    @classmethod
    def _raw(cls, coeffs, deg, field):
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        obj.deg = deg
        obj.field = field
        return obj

    # -- constructors --------------------------------------------------------------

    @classmethod
    def constant(cls, c, field):
        return cls({(0, 0, 0): c}, 0, field)

    @classmethod
    def linear(cls, a, b, c, field):
        return cls({(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c}, 1, field)

    @classmethod
    def conic(cls, coeffs6, field):
        """From ``(x², y², z², xy, xz, yz)`` coefficients."""
        exps = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1))
        return cls(dict(zip(exps, coeffs6)), 2, field)

    @classmethod
    def variable(cls, i: int, field):
        e = [0, 0, 0]
        e[i] = 1
        return cls({tuple(e): field.one}, 1, field)

    # -- arithmetic ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other):
        if not isinstance(other, HomPoly):
            raise TypeError("expected a HomPoly")
        if other.field != self.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        if self.deg != other.deg and not (self.is_zero() or other.is_zero()):
            raise ValueError("sum of forms of different degrees")
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e, self.field.zero) + c
            if v == 0:
                out.pop(e, None)
            else:
                out[e] = v
        deg = self.deg if self.coeffs else other.deg
        return HomPoly._raw(out, deg, self.field)

    def __neg__(self):
        return HomPoly._raw({e: -c for e, c in self.coeffs.items()}, self.deg, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, HomPoly):
            c = self.field(other)
            if c == 0:
                return HomPoly._raw({}, self.deg, self.field)
            return HomPoly._raw({e: v * c for e, v in self.coeffs.items()}, self.deg, self.field)
        self._check(other)
        out = {}
        zero = self.field.zero
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, zero) + c1 * c2
        out = {e: c for e, c in out.items() if c != 0}
        return HomPoly._raw(out, self.deg + other.deg, self.field)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        out = HomPoly.constant(self.field.one, self.field)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.deg == other.deg and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.deg, frozenset(self.coeffs.items())))

    def coeff(self, e):
        return self.coeffs.get(tuple(e), self.field.zero)

    def vector(self):
        """Coefficients in :func:`monomial_basis` order."""
        return [self.coeff(e) for e in monomial_basis(self.deg)]

    def __call__(self, x, y, z):
        acc = None
        for (a, b, c), v in self.coeffs.items():
            term = v * (x ** a) * (y ** b) * (z ** c)
            acc = term if acc is None else acc + term
        return acc if acc is not None else self.field.zero * x

    def map_coeffs(self, fn, field) -> "HomPoly":
        """Apply a ring homomorphism to every coefficient."""
        out = {}
        for e, c in self.coeffs.items():
            v = fn(c)
            if v != 0:
                out[e] = v
        return HomPoly._raw(out, self.deg, field)

    def derivative(self, i: int) -> "HomPoly":
        if self.deg == 0:
            raise ValueError("derivative of a constant form")
        out = {}
        for e, c in self.coeffs.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        out = {e: c for e, c in out.items() if c != 0}
        return HomPoly._raw(out, self.deg - 1, self.field)

    def substitute(self, rows) -> "HomPoly":
        """``f(M v)``: replace variable ``i`` by the linear form ``rows[i]``."""
        lin = [HomPoly.linear(*r, field=self.field) for r in rows]
        cache = {}

        def power(i, n):
            key = (i, n)
            if key not in cache:
                cache[key] = lin[i] ** n
            return cache[key]

        out = HomPoly._raw({}, self.deg, self.field)
        for (a, b, c), v in self.coeffs.items():
            out = out + power(0, a) * power(1, b) * power(2, c) * v
        return out

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in monomial_basis(self.deg):
            if e in self.coeffs:
                mono = "*".join(
                    v if k == 1 else f"{v}^{k}" for v, k in zip(VARS, e) if k
                )
                parts.append(f"({self.coeffs[e]})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def partials(f: HomPoly):
    """``(f_x, f_y, f_z)``."""
    if f.deg < 1:
        raise ValueError("partials need degree >= 1")
    return tuple(f.derivative(i) for i in range(3))


def product(polys: Iterable[HomPoly], field) -> HomPoly:
    out = HomPoly.constant(field.one, field)
    for g in polys:
        out = out * g
    return out


# -- restriction to a line ------------------------------------------------------------

class BinaryForm:
    """``sum coeffs[i] * s^(n-i) * t^i`` of formal degree ``n``."""

    __slots__ = ("coeffs", "n", "field")

    def __init__(self, coeffs, field):
        self.coeffs = tuple(coeffs)
        self.n = len(self.coeffs) - 1
        self.field = field

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def dehomogenize(self):
        """Ascending coefficients in ``u = s/t`` and the order of the root at ``(1:0)``.

        ``F(s, t) = t^n * h(s/t)``; the root ``(1:0)`` has multiplicity ``n - deg h``.
        """
        h = list(reversed(self.coeffs))  # h[i] multiplies u^i
        while h and h[-1] == 0:
            h.pop()
        return h, self.n - (len(h) - 1)

    def __eq__(self, other):
        return isinstance(other, BinaryForm) and self.coeffs == other.coeffs

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c != 0:
                terms.append(f"({c})*s^{self.n - i}*t^{i}")
        return " + ".join(terms) if terms else "0"


class LineRestriction:
    """The restriction of a form to a line, with its parametrization.

    ``param[j]`` is the pair of coefficients ``(cs, ct)`` with ``x_j = cs*s + ct*t``.
    ``contained`` is set when the line divides the form.
    """

    __slots__ = ("form", "param", "contained")

    def __init__(self, form: BinaryForm, param, contained: bool):
        self.form = form
        self.param = param
        self.contained = contained

    def point(self, s, t):
        return tuple(cs * s + ct * t for cs, ct in self.param)


def line_parametrization(L, field):
    """Parametrize the line ``l0 x + l1 y + l2 z = 0``.

    The pivot is the last coordinate with a nonzero coefficient; the other two
    coordinates, in order, become ``s`` and ``t``. For ``x - z = 0`` this gives
    ``(s : t : s)``.
    """
    from ..errors import DegenerateLine

    L = [field(c) for c in L]
    piv = max((i for i in range(3) if L[i] != 0), default=None)
    if piv is None:
        raise DegenerateLine("line with coefficients (0, 0, 0)")
    free = [i for i in range(3) if i != piv]
    zero, one = field.zero, field.one
    param = [None, None, None]
    param[free[0]] = (one, zero)
    param[free[1]] = (zero, one)
    param[piv] = (-L[free[0]] / L[piv], -L[free[1]] / L[piv])
    return param


def restrict_to_line(f: HomPoly, L) -> LineRestriction:
    field = f.field
    param = line_parametrization(L, field)
    n = f.deg
    zero = field.zero
    lin = [[cs, ct] for cs, ct in param]  # ascending in t/s: cs*s + ct*t

    def bpow(form, k):
        out = [field.one]
        for _ in range(k):
            nxt = [zero] * (len(out) + 1)
            for i, c in enumerate(out):
                nxt[i] = nxt[i] + c * form[0]
                nxt[i + 1] = nxt[i + 1] + c * form[1]
            out = nxt
        return out

    total = [zero] * (n + 1)
    cache = {}
    for (a, b, c), v in f.coeffs.items():
        parts = []
        for i, k in enumerate((a, b, c)):
            if (i, k) not in cache:
                cache[(i, k)] = bpow(lin[i], k)
            parts.append(cache[(i, k)])
        prod = parts[0]
        for q in parts[1:]:
            nxt = [zero] * (len(prod) + len(q) - 1)
            for i, x in enumerate(prod):
                if x != 0:
                    for j, y in enumerate(q):
                        nxt[i + j] = nxt[i + j] + x * y
            prod = nxt
        for i, x in enumerate(prod):
            total[i] = total[i] + v * x
    form = BinaryForm(total, field)
    return LineRestriction(form, param, form.is_zero())


# -- resultants --------------------------------------------------------------------

def _interpolate(xs, ys, field):
    """Ascending coefficients of the polynomial through ``(xs[i], ys[i])`` (Newton form)."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = [field.zero] * n
    for i in range(n - 1, -1, -1):
        # out = out * (X - xs[i]) + coef[i]
        nxt = [field.zero] * n
        for k in range(n - 1):
            nxt[k + 1] = nxt[k + 1] + out[k]
        for k in range(n):
            nxt[k] = nxt[k] - xs[i] * out[k]
        nxt[0] = nxt[0] + coef[i]
        out = nxt
    return out


def coefficients_in(f: HomPoly, var: int):
    """Coefficients of ``f`` as a polynomial in ``var``: list indexed by power.

    Entry ``i`` is a dict from the exponent pair of the other two variables to
    the coefficient.
    """
    out = [dict() for _ in range(f.deg + 1)]
    others = [i for i in range(3) if i != var]
    for e, c in f.coeffs.items():
        out[e[var]][(e[others[0]], e[others[1]])] = c
    return out


def res_wrt(f: HomPoly, g: HomPoly, var: int) -> HomPoly:
    """Resultant of ``f`` and ``g`` with respect to variable ``var``.

    Computed with the formal degrees ``deg f`` and ``deg g`` in ``var``, so the
    result is a form of degree ``deg f * deg g`` in the two other variables
    (stored as a HomPoly with exponent 0 in ``var``).
    """
    if f.field != g.field:
        raise FieldMismatch("resultant of polynomials over different fields")
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant needs nonzero polynomials")
    field = f.field
    N = f.deg * g.deg
    cf, cg = coefficients_in(f, var), coefficients_in(g, var)
    others = [i for i in range(3) if i != var]

    def specialize(cs, u):
        # value at (u, 1) of each coefficient form
        vals = []
        for d in cs:
            acc = field.zero
            for (a, _b), c in d.items():
                acc = acc + c * u ** a
            vals.append(acc)
        return vals

    xs = [field(k) for k in range(N + 1)]
    ys = [formal_resultant(specialize(cf, u), specialize(cg, u), field.zero, field.one) for u in xs]
    coeffs = _interpolate(xs, ys, field)
    out = {}
    for a, c in enumerate(coeffs):
        if c != 0:
            e = [0, 0, 0]
            e[others[0]] = a
            e[others[1]] = N - a
            out[tuple(e)] = c
    return HomPoly._raw(out, N, field)
