"""Exact linear algebra on the Jacobian ideal of a plane curve.

Everything is reduced to integer matrices handed to FLINT. Over a number field
``K`` of degree ``n`` a K-linear map is written as a Q-linear map on the power
basis coordinates (each scalar becomes an ``n x n`` block) unless every
coefficient of ``f`` is rational, which is the common case since conjugate
factors multiply out; dimensions over Q are then divided by ``n``.

Monomials are ordered by :func:`conicline.poly.monomial_basis` everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from math import lcm

import flint

from .errors import RouteDisagreement, SoundnessError, StabilizationOverflow
from .linalg import IntMatrix
from .numbers import AlgebraicElement, is_prime
from .numbers.finite import rational_reconstruction
from .poly import HomPoly, monomial_basis, monomial_index, partials

FREE = "Free"
NEARLY_FREE = "NearlyFree"
NEITHER = "Neither"
NEARLY_FREE_NOTE = "nearly free per cited reference: N(f) != 0 and every graded piece has dimension <= 1"


# -- scalar blocks -----------------------------------------------------------------------

def _is_rational(c) -> bool:
    return not isinstance(c, AlgebraicElement) or c.is_rational()


def _block(c, n, field):
    """Matrix of multiplication by ``c`` on the power basis (columns = images of a^j)."""
    if n == 1:
        return [[Fraction(c.coords[0]) if isinstance(c, AlgebraicElement) else Fraction(c)]]
    cols = []
    basis = field.one
    for _ in range(n):
        cols.append((c * basis).coords)
        basis = basis * field.gen
    return [[cols[j][i] for j in range(n)] for i in range(n)]


class Jacobian:
    """Graded pieces of ``J_f`` as integer matrices, with caching."""

    def __init__(self, f: HomPoly):
        if f.deg < 2:
            raise ValueError("need a form of degree >= 2")
        self.f = f
        self.m = f.deg
        field = f.field
        if all(_is_rational(c) for c in f.coeffs.values()):
            self.n = 1
            field_for_blocks = None
        else:
            self.n = field.degree
            field_for_blocks = field
        raw = []
        den = 1
        for p in partials(f):
            terms = {}
            for e, c in p.coeffs.items():
                blk = _block(c, self.n, field_for_blocks)
                for row in blk:
                    for v in row:
                        den = lcm(den, v.denominator)
                terms[e] = blk
            raw.append(terms)
        # one common scale keeps J_f unchanged and makes every entry an integer
        self.parts = [
            {e: [[int(v * den) for v in row] for row in blk] for e, blk in terms.items()} for terms in raw
        ]
        self._ann = {}
        self._rank = {}

    def dim_S(self, q: int) -> int:
        return 0 if q < 0 else (q + 1) * (q + 2) // 2

    def _gen_columns(self, q: int):
        """Column blocks of the map (a, b, c) in S_q^3 -> S_{q+m-1}; yields (col, row, value)."""
        n = self.n
        D = q + self.m - 1
        rows = monomial_index(D)
        col = 0
        for terms in self.parts:
            for mono in monomial_basis(q):
                for j in range(n):
                    for e, blk in terms.items():
                        r = rows[(e[0] + mono[0], e[1] + mono[1], e[2] + mono[2])]
                        for i in range(n):
                            v = blk[i][j]
                            if v:
                                yield col, r * n + i, v
                    col += 1

    def syzygy_matrix(self, q: int) -> IntMatrix:
        nrows = self.n * self.dim_S(q + self.m - 1)
        ncols = 3 * self.n * self.dim_S(q)
        mat = flint.fmpz_mat(nrows, ncols)
        for c, r, v in self._gen_columns(q):
            mat[r, c] = v
        obj = IntMatrix.__new__(IntMatrix)
        obj.m = mat
        return obj

    def _transpose_J(self, D: int):
        q = D - self.m + 1
        ncols = self.n * self.dim_S(D)
        nrows = 3 * self.n * self.dim_S(q)
        mat = flint.fmpz_mat(max(nrows, 0), ncols)
        if q >= 0:
            for c, r, v in self._gen_columns(q):
                mat[c, r] = v
        return mat, nrows, ncols

    def annihilator(self, D: int, modular: bool = True):
        """Rows spanning the linear functionals on S_D vanishing on (J_f)_D, and rank (J_f)_D.

        With ``modular`` the rows come from reduced echelon forms modulo a few
        large primes, lifted by CRT and rational reconstruction, and are
        accepted only after an exact check over ZZ (see
        :func:`_certified_annihilator`); otherwise, or if lifting fails,
        FLINT's fraction-free nullspace is used.
        """
        key = (D, modular)
        if key not in self._ann:
            mat, nrows, ncols = self._transpose_J(D)
            ann = None
            if nrows == 0:
                ann = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
            elif modular:
                ann = _certified_annihilator(mat)
            if ann is None:
                x, nullity = mat.nullspace()
                ann = [[int(x[i, j]) for i in range(ncols)] for j in range(nullity)]
            self._ann[key] = ann
            self._rank[D] = ncols - len(ann)
        return self._ann[key]

    def rank_J(self, D: int) -> int:
        """dim (J_f)_D over the coefficient field."""
        if D < self.m - 1:
            return 0
        self.annihilator(D)
        return self._rank[D] // self.n

    def milnor_dim(self, D: int) -> int:
        return self.dim_S(D) - self.rank_J(D)

    def saturation_dim(self, q: int, s: int) -> int:
        """dim { g in S_q : x^s g, y^s g, z^s g in J_f }."""
        n = self.n
        D = q + s
        ann = self.annihilator(D)
        ncols = n * self.dim_S(q)
        if not ann:
            return self.dim_S(q)
        idx = monomial_index(D)
        basis = monomial_basis(q)
        rows = []
        for shift in ((s, 0, 0), (0, s, 0), (0, 0, s)):
            cols = [idx[(e[0] + shift[0], e[1] + shift[1], e[2] + shift[2])] for e in basis]
            for a in ann:
                rows.append([a[c * n + j] for c in cols for j in range(n)])
        mat = IntMatrix.from_rows(rows)
        # J_q lies in the saturation, and reducing mod p can only grow the
        # kernel, so equal bounds settle the dimension without exact elimination
        lower = n * self.rank_J(q)
        upper = ncols - flint.nmod_mat(mat.m, LIFT_PRIMES[0]).rank()
        if upper == lower:
            return lower // n
        return mat.nullity() // n


def _large_primes(count: int, start: int = 2 ** 62):
    out = []
    n = start - 1
    while len(out) < count:
        if is_prime(n):
            out.append(n)
        n -= 2
    return out


LIFT_PRIMES = _large_primes(8)


def _certified_annihilator(mat, primes=LIFT_PRIMES):
    """Integer basis of the right kernel of ``mat``, or None if lifting fails.

    Certificate: the rank of ``mat`` mod p is a lower bound for its rank over
    Q, so ``ncols - rank_p`` independent vectors that ``mat`` kills exactly
    over ZZ prove the kernel has exactly that dimension.
    """
    ncols = mat.ncols()
    moduli, residues, pivots = [], [], None
    for p in primes:
        red, rank = flint.nmod_mat(mat, p).rref()
        piv = []
        for i in range(rank):
            j = piv[-1] + 1 if piv else 0
            while int(red[i, j]) == 0:
                j += 1
            piv.append(j)
        if pivots is None or len(piv) > len(pivots):
            # an unlucky earlier prime dropped rank; restart from this one
            pivots, moduli, residues = piv, [], []
        elif piv != pivots:
            continue
        free = [j for j in range(ncols) if j not in set(pivots)]
        moduli.append(p)
        residues.append([[int(red[i, j]) for j in free] for i in range(len(pivots))])
        lifted = _lift_rref(residues, moduli)
        if lifted is None:
            continue
        ann = []
        for col, j in enumerate(free):
            entries = [-lifted[i][col] for i in range(len(pivots))]
            den = lcm(*(e.denominator for e in entries)) if entries else 1
            row = [0] * ncols
            row[j] = den
            for i, e in enumerate(entries):
                row[pivots[i]] = int(e * den)
            ann.append(row)
        if not ann:
            return ann
        check = mat * flint.fmpz_mat(ann).transpose()
        if check.is_zero():
            return ann
    return None


def _lift_rref(residues, moduli):
    N = 1
    for p in moduli:
        N *= p
    weights = [(N // p) * pow(N // p, -1, p) for p in moduli]
    nr = len(residues[0])
    nc = len(residues[0][0]) if nr else 0
    out = []
    for i in range(nr):
        row = []
        for j in range(nc):
            x = sum(w * r[i][j] for w, r in zip(weights, residues)) % N
            q = rational_reconstruction(x, N)
            if q is None:
                return None
            row.append(q)
        out.append(row)
    return out


@lru_cache(maxsize=32)
def jacobian(f: HomPoly) -> Jacobian:
    """Shared, cached :class:`Jacobian` of ``f``."""
    return Jacobian(f)


# -- reports ---------------------------------------------------------------------------

@dataclass
class SyzygyReport:
    m: int
    r: int
    kernel_dims: dict
    witness: tuple  # (a, b, c) HomPolys of degree r

    def to_json(self):
        return {
            "m": self.m,
            "r": self.r,
            "kernel_dims": {str(q): v for q, v in self.kernel_dims.items()},
            "witness": [repr(w) for w in self.witness],
        }


@dataclass
class FreenessReport:
    m: int
    r: int
    tau: int
    verdict: str
    exponents: tuple | None
    n_dims: dict
    routes: dict = dc_field(default_factory=dict)
    resolution: str | None = None
    notes: list = dc_field(default_factory=list)

    def to_json(self):
        return {
            "m": self.m,
            "r": self.r,
            "tau": self.tau,
            "verdict": self.verdict,
            "exponents": list(self.exponents) if self.exponents else None,
            "n_dims": {str(q): v for q, v in self.n_dims.items()},
            "routes": self.routes,
            "resolution": self.resolution,
            "notes": list(self.notes),
        }


def syzygy_matrix(f: HomPoly, q: int) -> IntMatrix:
    """Integer matrix of ``(a, b, c) -> a f_x + b f_y + c f_z`` on ``S_q^3``.

    Rows follow ``monomial_basis(q + m - 1)``; columns are three copies of
    ``monomial_basis(q)`` (for f_x, f_y, f_z). Over a number field with
    irrational coefficients each scalar is an ``n x n`` block. The matrix is a
    nonzero integer multiple of the true one, which changes neither rank nor
    kernel.
    """
    return jacobian(f).syzygy_matrix(q)


def _vector_to_polys(vec, q, n, field):
    basis = monomial_basis(q)
    out = []
    size = len(basis)
    for part in range(3):
        coeffs = {}
        for idx, e in enumerate(basis):
            chunk = vec[(part * size + idx) * n:(part * size + idx + 1) * n]
            if n == 1:
                c = Fraction(chunk[0])
            else:
                c = field([Fraction(v) for v in chunk])
            if c != 0:
                coeffs[e] = c
        out.append(HomPoly(coeffs, q, field))
    return tuple(out)


def mdr(f: HomPoly) -> SyzygyReport:
    """Minimal degree of a Jacobian syzygy, with an exactly verified witness."""
    J = jacobian(f)
    m = f.deg
    dims = {}
    for q in range(0, m):
        mat = J.syzygy_matrix(q)
        null = mat.nullspace()
        dims[q] = len(null) // J.n
        if null:
            witness = _vector_to_polys(null[0], q, J.n, f.field)
            fx, fy, fz = partials(f)
            total = witness[0] * fx + witness[1] * fy + witness[2] * fz
            if not total.is_zero() or all(w.is_zero() for w in witness):
                raise SoundnessError("syzygy witness does not verify")
            return SyzygyReport(m, q, dims, witness)
    raise SoundnessError("no syzygy found below degree m, which is impossible")


def milnor_hilbert(f: HomPoly, up_to: int) -> dict:
    """``q -> dim (S/J_f)_q`` for ``0 <= q <= up_to``."""
    J = jacobian(f)
    return {q: J.milnor_dim(q) for q in range(up_to + 1)}


def saturation_piece(J: Jacobian, q: int, limit: int) -> int:
    """dim (I_f)_q with the exponent s doubling from 1 until the dimension is stable."""
    s = 1
    prev = J.saturation_dim(q, s)
    while True:
        s2 = 2 * s
        if s2 > limit:
            raise StabilizationOverflow(f"saturation in degree {q} not stable at s = {s}")
        cur = J.saturation_dim(q, s2)
        if cur == prev:
            return cur
        s, prev = s2, cur


def n_dims(f: HomPoly) -> dict:
    """``q -> dim N(f)_q`` over the window ``0 <= q <= 3m``."""
    J = jacobian(f)
    m = f.deg
    out = {}
    for q in range(0, 3 * m + 1):
        out[q] = saturation_piece(J, q, 3 * m) - J.rank_J(q)
    return out


def global_tau(f: HomPoly) -> int:
    """Total Tjurina number, read off as the stable value of the Milnor algebra's Hilbert function."""
    J = jacobian(f)
    m = f.deg
    hi = 3 * m
    a, b = J.milnor_dim(hi - 1), J.milnor_dim(hi)
    if a != b:
        raise SoundnessError("Hilbert function of the Milnor algebra not yet stable")
    return b


def resolution_shape(m: int, d1: int, d2: int) -> str:
    a, b = d1 + m - 1, d2 + m - 1
    left = f"S^2(-{a})" if a == b else f"S(-{a}) + S(-{b})"
    return f"0 -> {left} -> S^3(-{m - 1}) -> S -> M(f) -> 0"


def freeness(f: HomPoly, census=None) -> FreenessReport:
    """Free / nearly free / neither, with the saturation route and, if a census is given, the Tjurina route."""
    m = f.deg
    syz = mdr(f)
    r = syz.r
    nd = n_dims(f)
    tau = global_tau(f)
    free_a = all(v == 0 for v in nd.values())
    routes = {"saturation": free_a}
    notes = []
    if census is not None and census.in_class:
        if census.tau != tau:
            raise SoundnessError(f"census tau {census.tau} differs from algebraic tau {tau}")
        free_b = 2 * r <= m - 1 and r * (m - 1 - r) == (m - 1) ** 2 - census.tau
        routes["tjurina"] = free_b
        if free_b != free_a:
            raise RouteDisagreement(f"saturation route says {free_a}, Tjurina route says {free_b}")
    exponents = None
    resolution = None
    if free_a:
        verdict = FREE
        d1, d2 = r, m - 1 - r
        if d1 * d2 != (m - 1) ** 2 - tau or d1 > d2:
            raise SoundnessError("free curve violates d1 d2 = (m-1)^2 - tau")
        exponents = (d1, d2)
        resolution = resolution_shape(m, d1, d2)
    elif max(nd.values()) == 1:
        verdict = NEARLY_FREE
        notes.append(NEARLY_FREE_NOTE)
    else:
        verdict = NEITHER
    return FreenessReport(m, r, tau, verdict, exponents, nd, routes, resolution, notes)
