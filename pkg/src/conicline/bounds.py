"""Spectra of the singularities in play and the inequalities they feed.

All quantities are exact rationals. Each check becomes a :class:`BoundEntry`
holding both sides, the relation, and whether the check applies at all.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import ceil, comb

from .errors import AlphaOutOfRange
from .numbers import format_rational

# -- singularity types --------------------------------------------------------------------


@dataclass(frozen=True)
class SingType:
    name: str  # "A1", "A3", "D4" or "Central"
    m: int = 0  # number of lines for Central

    @property
    def mu(self) -> int:
        return {"A1": 1, "A3": 3, "D4": 4}.get(self.name, (self.m - 1) ** 2)

    @property
    def lct(self) -> Fraction:
        fixed = {"A1": Fraction(1), "A3": Fraction(3, 4), "D4": Fraction(2, 3)}
        return fixed.get(self.name, Fraction(2, self.m) if self.m else Fraction(1))

    def __str__(self):
        return self.name if self.name != "Central" else f"CentralMultiple({self.m})"


A1 = SingType("A1")
A3 = SingType("A3")
D4 = SingType("D4")


def CentralMultiple(m: int) -> SingType:
    if m < 2:
        raise ValueError("an ordinary multiple point needs m >= 2 lines")
    return SingType("Central", m)


TYPE_OF = {"Node": A1, "Tacnode": A3, "OrdinaryTriple": D4}


# -- spectra --------------------------------------------------------------------------------

class Spectrum:
    """A finite multiset of rationals, kept as sorted ``(alpha, multiplicity)`` pairs."""

    __slots__ = ("entries",)

    def __init__(self, items):
        cnt = Counter()
        if isinstance(items, dict):
            items = items.items()
        for a, n in items:
            if n:
                cnt[Fraction(a)] += n
        self.entries = tuple(sorted(cnt.items()))

    @property
    def total(self) -> int:
        return sum(n for _, n in self.entries)

    def as_dict(self):
        return dict(self.entries)

    def reflect(self, center=Fraction(1)) -> "Spectrum":
        return Spectrum((2 * center - a, n) for a, n in self.entries)

    def is_symmetric(self, center=Fraction(1)) -> bool:
        return self.reflect(center) == self

    def __eq__(self, other):
        return isinstance(other, Spectrum) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "{" + ", ".join(f"{format_rational(a)}:{n}" for a, n in self.entries) + "}"

    def to_json(self):
        return [[format_rational(a), n] for a, n in self.entries]


def monomial_spectrum(m: int) -> Spectrum:
    """Spectrum of ``x^m`` in one variable: ``1/m, ..., (m-1)/m``."""
    return Spectrum((Fraction(j, m), 1) for j in range(1, m))


def thom_sebastiani(a: Spectrum, b: Spectrum) -> Spectrum:
    """All pairwise sums, multiplicities multiplied."""
    out = Counter()
    for x, n in a.entries:
        for y, k in b.entries:
            out[x + y] += n * k
    return Spectrum(out.items())


def spectrum(s: SingType) -> Spectrum:
    if s.name == "A1":
        return Spectrum([(1, 1)])
    if s.name == "A3":
        return Spectrum([(Fraction(3, 4), 1), (1, 1), (Fraction(5, 4), 1)])
    if s.name == "D4":
        return Spectrum([(Fraction(2, 3), 1), (1, 2), (Fraction(4, 3), 1)])
    m = s.m
    items = [(Fraction(j + 1, m), j) for j in range(1, m)]
    items += [(Fraction(m + j - 1, m), m - j) for j in range(2, m)]
    return Spectrum(items)


def deg_B(sp: Spectrum, lo, hi) -> int:
    """Total multiplicity of spectral numbers in the half-open interval ``(lo, hi]``."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    return sum(n for a, n in sp.entries if lo < a <= hi)


# -- report entries -------------------------------------------------------------------------

@dataclass
class BoundEntry:
    name: str
    lhs: Fraction | None
    rhs: Fraction | None
    relation: str  # "<=" or ">="
    applicable: bool = True
    note: str = ""

    @property
    def holds(self):
        if not self.applicable:
            return None
        if self.relation == "<=":
            return self.lhs <= self.rhs
        if self.relation == ">=":
            return self.lhs >= self.rhs
        return self.lhs == self.rhs

    def to_json(self):
        return {
            "name": self.name,
            "lhs": format_rational(Fraction(self.lhs)) if self.lhs is not None else None,
            "relation": self.relation,
            "rhs": format_rational(Fraction(self.rhs)) if self.rhs is not None else None,
            "holds": self.holds,
            "applicable": self.applicable,
            "note": self.note,
        }


@dataclass
class BoundsReport:
    entries: list = dc_field(default_factory=list)

    def __getitem__(self, name) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def names(self):
        return [e.name for e in self.entries]

    def all_hold(self) -> bool:
        return all(e.holds is not False for e in self.entries)

    def to_json(self):
        return [e.to_json() for e in self.entries]


def split_degree(m: int):
    """``m = 3m' + eps`` with ``eps`` in {1, 2, 3}."""
    if m < 1:
        raise ValueError("degree must be positive")
    mp = (m - 1) // 3
    return mp, m - 3 * mp


def _need_in_class(c):
    if not c.in_class:
        raise ValueError("bounds need a census with only nodes, tacnodes and ordinary triple points")


def check_semicontinuity(m: int, k: int, c) -> list:
    """The spectral bounds on (t, n3), the tau bound, and the closed-form estimate."""
    _need_in_class(c)
    mp, eps = split_degree(m)
    n2, t, n3 = c.n2, c.t, c.n3
    corr = Fraction(mp * (5 * mp - 3), 2)
    central = spectrum(CentralMultiple(m)) if m >= 2 else Spectrum([])
    exact_mid = deg_B(central, Fraction(1, 3), Fraction(4, 3))
    exact_low = deg_B(central, Fraction(-1, 3), Fraction(2, 3))
    s1 = Fraction(mp * (mp - 1), 2)
    s2 = Fraction(mp * (2 * mp - 1))
    return [
        BoundEntry("t_plus_n3_bound", Fraction(t + n3), comb(m - 1, 2) + k - corr, "<=",
                   note=f"m = 3*{mp} + {eps}"),
        BoundEntry("triple_point_bound", Fraction(n3), Fraction((mp + 1) * (2 * mp + 1)), "<="),
        BoundEntry("tau_spectral_bound", Fraction(n2 + 3 * t + 4 * n3), (m - 1) ** 2 - corr, "<="),
        BoundEntry(
            "t_plus_n3_closed_form",
            Fraction(t + n3),
            Fraction(4 * m * m + m * (10 * eps - 9) - 5 * eps * eps - 9 * eps + 18, 18),
            "<=",
        ),
        BoundEntry(
            "central_spectrum_mid",
            Fraction(exact_mid),
            (m - 1) ** 2 - s1 - s2,
            "<=",
            note="exact deg_B over (1/3, 4/3] of the ordinary m-fold point vs the estimate with S1, S2",
        ),
        BoundEntry(
            "central_spectrum_low",
            Fraction(exact_low),
            Fraction((mp + 1) * (2 * mp + 1)),
            "<=",
            note="exact deg_B over (-1/3, 2/3] of the ordinary m-fold point",
        ),
        BoundEntry(
            "census_in_mid_window",
            Fraction(n2 + 3 * t + 4 * n3),
            Fraction(exact_mid),
            "<=",
            note="semicontinuity against the exact central spectrum",
        ),
        BoundEntry(
            "census_in_low_window",
            Fraction(n3),
            Fraction(exact_low),
            "<=",
            note="semicontinuity against the exact central spectrum",
        ),
    ]


def spectral_window_sums(c):
    """Per-point sums of deg_B over (1/3, 4/3] and (-1/3, 2/3], next to their closed forms."""
    _need_in_class(c)
    mid = low = 0
    for p in c.points:
        sp = spectrum(TYPE_OF[p.local_type])
        mid += deg_B(sp, Fraction(1, 3), Fraction(4, 3))
        low += deg_B(sp, Fraction(-1, 3), Fraction(2, 3))
    return {
        "mid": (mid, c.n2 + 3 * c.t + 4 * c.n3),
        "low": (low, c.n3),
    }


# -- orbifold Euler numbers and the Miyaoka-Yau type inequality --------------------------

ORBIFOLD_RANGE = {
    "A1": (Fraction(0), Fraction(1)),
    "A3": (Fraction(0), Fraction(1, 4)),
    "D4": (Fraction(0), Fraction(2, 3)),
}


def orbifold_euler(s: SingType, alpha):
    """Local orbifold Euler number at ``alpha``: ``(value, is_upper_bound)``."""
    alpha = Fraction(alpha)
    if s.name not in ORBIFOLD_RANGE:
        raise ValueError(f"no orbifold Euler number for {s}")
    lo, hi = ORBIFOLD_RANGE[s.name]
    if not lo <= alpha <= hi:
        raise AlphaOutOfRange(f"alpha = {alpha} outside [{lo}, {hi}] for {s}")
    if s.name == "A1":
        return (1 - alpha) ** 2, False
    if s.name == "A3":
        return 1 - 2 * alpha, False
    return (1 - Fraction(3, 2) * alpha) ** 2, True


def orbifold_contribution(s: SingType, alpha) -> Fraction:
    alpha = Fraction(alpha)
    e, _ = orbifold_euler(s, alpha)
    return 3 * (alpha * (s.mu - 1) + 1 - e)


def check_orbifold_my(m: int, c, alpha=Fraction(1, 4)) -> BoundEntry:
    """Sum of local contributions against ``(3a - a^2) m^2 - 3a m``; needs ``3/m <= a <= 1/4``."""
    _need_in_class(c)
    alpha = Fraction(alpha)
    rhs = (3 * alpha - alpha * alpha) * m * m - 3 * alpha * m
    if not (Fraction(3, m) <= alpha <= Fraction(1, 4)):
        return BoundEntry("orbifold_my", None, None, "<=", applicable=False,
                          note=f"alpha = {alpha} outside [3/m, 1/4] = [{Fraction(3, m)}, 1/4]")
    lhs = sum((orbifold_contribution(TYPE_OF[p.local_type], alpha) for p in c.points), Fraction(0))
    return BoundEntry("orbifold_my", lhs, rhs, "<=", note=f"alpha = {alpha}; triple points use the upper bound")


def check_hirzebruch(d: int, k: int, c) -> BoundEntry:
    """``20k + n2 + (3/4) n3 >= d + 4t``, applicable when ``2k + d >= 12``."""
    _need_in_class(c)
    lhs = 20 * k + c.n2 + Fraction(3, 4) * c.n3
    rhs = Fraction(d + 4 * c.t)
    return BoundEntry("hirzebruch", lhs, rhs, ">=", applicable=(2 * k + d >= 12))


def hirzebruch_from_orbifold(d: int, k: int, c):
    """Re-derive the Hirzebruch-type inequality from the orbifold one at alpha = 1/4.

    Given the count identity, 16 times the orbifold slack equals the
    Hirzebruch slack. Returns both slacks and whether the relation holds.
    """
    m = d + 2 * k
    my = check_orbifold_my(m, c)
    hz = check_hirzebruch(d, k, c)
    if not my.applicable:
        return None
    slack_my = my.rhs - my.lhs
    slack_hz = hz.lhs - hz.rhs
    return {"orbifold_slack": slack_my, "hirzebruch_slack": slack_hz, "consistent": 16 * slack_my == slack_hz}


# -- Arnold exponent and the mdr bound ----------------------------------------------------

def arnold_exponent(c) -> Fraction:
    types = {TYPE_OF[p.local_type] for p in c.points}
    return min((s.lct for s in types), default=Fraction(1))


def arnold_and_mdr_bound(m: int, c, freeness=None) -> list:
    _need_in_class(c)
    alpha = arnold_exponent(c)
    bound = alpha * m - 2
    entries = [
        BoundEntry("arnold_mdr", Fraction(freeness.r) if freeness else None, bound, ">=",
                   applicable=freeness is not None,
                   note=f"alpha_C = {alpha}; mdr >= {max(0, ceil(bound))}"),
    ]
    if freeness is not None and freeness.verdict == "Free":
        entries.append(BoundEntry("free_degree_ceiling", Fraction(m), Fraction(9), "<=",
                                  note="free with nodes, tacnodes and ordinary triple points"))
        entries.append(BoundEntry("free_mdr_floor", Fraction(freeness.r), Fraction(2 * m, 3) - 2, ">="))
    return entries


def bounds_report(census, freeness=None) -> BoundsReport:
    """Every applicable check for an in-class census."""
    d, k = census.d, census.k
    m = d + 2 * k
    rep = BoundsReport()
    rep.entries.extend(check_semicontinuity(m, k, census))
    rep.entries.append(check_orbifold_my(m, census))
    rep.entries.append(check_hirzebruch(d, k, census))
    rep.entries.extend(arnold_and_mdr_bound(m, census, freeness))
    return rep
