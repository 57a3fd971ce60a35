"""Which weak combinatorics can a free conic-line arrangement have?

A free arrangement of ``d`` lines and ``k`` smooth conics with exponents
``(d1, d2)`` satisfies two integer identities:

    n2 + 2t + 3n3 = C(m, 2) - k                (pairwise intersections)
    d1^2 + d1 d2 + d2^2 = n2 + 3t + 4n3         (total Tjurina number)

with ``d1 + d2 = m - 1``. Candidates solving both are enumerated exhaustively
and then run through a list of necessary conditions, each recorded by name
when it fails. Survivors are matched against verified catalog arrangements;
survivors with no realization are labelled as excluded by geometric case
analysis, which this package does not re-prove.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import SoundnessError

MAX_FREE_DEGREE = 9

REALIZABLE = "Realizable"
EXCLUDED = "NumericallyOpenButExcludedByCaseAnalysis"
EMPTY = "Empty"


@dataclass
class Candidate:
    d: int
    k: int
    n2: int
    t: int
    n3: int
    d1: int
    d2: int
    pruned_by: list = dc_field(default_factory=list)
    realization: str | None = None

    @property
    def m(self):
        return self.d + 2 * self.k

    @property
    def tau(self):
        return self.n2 + 3 * self.t + 4 * self.n3

    @property
    def survives(self):
        return not self.pruned_by

    def key(self):
        return (self.n2, self.t, self.n3, self.d1, self.d2)

    def to_json(self):
        return {
            "d": self.d,
            "k": self.k,
            "n2": self.n2,
            "t": self.t,
            "n3": self.n3,
            "d1": self.d1,
            "d2": self.d2,
            "pruned_by": list(self.pruned_by),
            "realization": self.realization,
        }


def intersection_count(d: int, k: int) -> int:
    return comb(d + 2 * k, 2) - k


def _check_identities(c: Candidate):
    m = c.m
    if c.d1 + c.d2 != m - 1 or c.d1 < 1 or c.d1 > c.d2:
        raise SoundnessError(f"bad exponents {c.d1}, {c.d2} for m = {m}")
    if c.n2 + 2 * c.t + 3 * c.n3 != intersection_count(c.d, c.k):
        raise SoundnessError("intersection count identity fails")
    if c.d1 ** 2 + c.d2 ** 2 + c.d1 * c.d2 != c.tau:
        raise SoundnessError("Tjurina identity fails")
    # the same two identities solved for d1 d2
    rhs = 2 * c.k ** 2 - 2 * c.k + 1 + 2 * c.k * c.d + Fraction(c.d ** 2 - 3 * c.d, 2) - c.t - c.n3
    if c.d1 * c.d2 != rhs:
        raise SoundnessError("product of exponents disagrees with its closed form")


def enumerate_candidates(d: int, k: int) -> list:
    """All solutions of the two identities, ordered by (d1, t, n3). No prunes applied."""
    if d < 0 or k < 0:
        raise ValueError("d and k must be non-negative")
    m = d + 2 * k
    if m < 3:
        raise ValueError("need m = d + 2k >= 3")
    total = intersection_count(d, k)
    out = []
    for d1 in range(1, (m - 1) // 2 + 1):
        d2 = m - 1 - d1
        tau = d1 * d1 + d1 * d2 + d2 * d2
        for t in range(tau // 3 + 1):
            for n3 in range((tau - 3 * t) // 4 + 1):
                n2 = tau - 3 * t - 4 * n3
                if n2 + 2 * t + 3 * n3 != total:
                    continue
                c = Candidate(d, k, n2, t, n3, d1, d2)
                _check_identities(c)
                out.append(c)
    return out


def enumerate_naive(d: int, k: int) -> set:
    """Independent oracle: a plain loop over (n2, t, n3, d1) with tau <= (m-1)^2."""
    m = d + 2 * k
    bound = (m - 1) ** 2
    out = set()
    for d1 in range(1, m - 1):
        d2 = m - 1 - d1
        if d2 < d1:
            continue
        for n2 in range(bound + 1):
            for t in range(bound // 3 + 1):
                for n3 in range(bound // 4 + 1):
                    if n2 + 3 * t + 4 * n3 > bound:
                        break
                    if n2 + 2 * t + 3 * n3 == comb(m, 2) - k and d1 * d1 + d1 * d2 + d2 * d2 == n2 + 3 * t + 4 * n3:
                        out.add((n2, t, n3, d1, d2))
    return out


# -- prune rules ----------------------------------------------------------------------


def _pair_profiles(k: int):
    n = comb(k, 2)
    for m2 in range(n + 1):
        for m3 in range(n - m2 + 1):
            yield m2, m3, n - m2 - m3


def _feasible_profiles(c: Candidate):
    """Pair profiles (m2, m3, m4) compatible with the tacnode and node budgets."""
    return [
        (m2, m3, m4)
        for m2, m3, m4 in _pair_profiles(c.k)
        if 2 * m2 + m3 <= c.t and 2 * m3 + 4 * m4 <= c.n2 + c.n3
    ]


def _clique_size(edges: int) -> int:
    """Fewest vertices carrying ``edges`` edges."""
    s = 1
    while comb(s, 2) < edges:
        s += 1
    return s


def _max_tangencies(c: Candidate, profile) -> int:
    """Most tacnodes available for a pair profile.

    Two conics meeting in two points have no common tangent allowed in the
    class, so each line is tangent to an independent set of the graph whose
    edges are those pairs. Packing the edges into a clique leaves the largest
    independent set, ``k - s + 1``.
    """
    m2, m3, _ = profile
    if c.k == 0:
        return 0
    free_conics = c.k - _clique_size(m2) + 1
    return 2 * m2 + m3 + c.d * free_conics


def rule_degree(c):
    return c.m <= MAX_FREE_DEGREE


def rule_node_triple_budget(c):
    return 2 * (c.n2 + c.n3) <= 3 * (c.d - 1)


def rule_tacnode_floor(c):
    return 4 * c.t >= 4 * (c.k * c.k - c.k + c.k * c.d - c.n3) + (c.d - 1) * (c.d - 3)


def rule_pair_profile(c):
    return bool(_feasible_profiles(c))


def rule_tangency_capacity(c):
    return c.t <= c.d * c.k + 2 * comb(c.k, 2)


def rule_bitangent_pairs(c):
    return any(c.t <= _max_tangencies(c, p) for p in _feasible_profiles(c))


@dataclass(frozen=True)
class PruneRule:
    name: str
    test: object
    anchor: str
    heuristic: bool = False


RULES = (
    PruneRule("degree_at_most_9", rule_degree, "a free curve with these singularities has m <= 9"),
    PruneRule("node_triple_budget", rule_node_triple_budget, "n2 + n3 <= 3(d-1)/2 from d1 d2 <= (m-1)^2/4"),
    PruneRule("tacnode_floor", rule_tacnode_floor, "t >= k^2 - k + kd + (d-1)(d-3)/4 - n3"),
    PruneRule("pair_profile", rule_pair_profile,
              "some (m2, m3, m4) with m2 + m3 + m4 = C(k,2), 2m2 + m3 <= t, 2m3 + 4m4 <= n2 + n3"),
    PruneRule("tangency_capacity", rule_tangency_capacity,
              "t <= dk + 2 C(k,2): one tacnode per line-conic pair, two per conic pair", heuristic=True),
    PruneRule("bitangent_pairs", rule_bitangent_pairs,
              "a line is tangent to at most one conic of a pair meeting in two points", heuristic=True),
)


def apply_prunes(c: Candidate) -> Candidate:
    c.pruned_by = [r.name for r in RULES if not r.test(c)]
    return c


def survivors(d: int, k: int) -> list:
    return [c for c in map(apply_prunes, enumerate_candidates(d, k)) if c.survives]


# -- realizations ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def verified_realizations():
    """Free in-class catalog entries: ``{(d, k, n2, t, n3, d1, d2): name}``, computed, not assumed."""
    from .geometry import catalog, names
    from .milnor import FREE

    out = {}
    for name in names():
        arr = catalog(name)
        if arr.k == 0 or arr.d == 0 or arr.m > MAX_FREE_DEGREE:
            continue
        arr, c, fr = analyze_catalog_entry(name)
        if c.in_class and fr.verdict == FREE:
            out[(arr.d, arr.k, c.n2, c.t, c.n3) + tuple(fr.exponents)] = name
    return out


def _exclusion_note(d: int) -> str:
    if d <= 3:
        return "excluded by the case analysis for at most three lines"
    return f"excluded by the geometric case analysis for {d} lines"


@dataclass
class PairReport:
    d: int
    k: int
    status: str
    candidates: list
    note: str = ""

    @property
    def survivors(self):
        return [c for c in self.candidates if c.survives]

    def to_json(self):
        return {
            "d": self.d,
            "k": self.k,
            "m": self.d + 2 * self.k,
            "status": self.status,
            "note": self.note,
            "survivors": [c.to_json() for c in self.survivors],
            "candidates": [c.to_json() for c in self.candidates],
        }


def classify_pair(d: int, k: int, realizations=None) -> PairReport:
    if realizations is None:
        realizations = verified_realizations()
    cands = [apply_prunes(c) for c in enumerate_candidates(d, k)]
    alive = [c for c in cands if c.survives]
    for c in alive:
        c.realization = realizations.get((d, k) + c.key())
    if not alive:
        return PairReport(d, k, EMPTY, cands)
    if any(c.realization for c in alive):
        rest = [c for c in alive if not c.realization]
        note = f"{len(rest)} unrealized survivor(s) {_exclusion_note(d)}" if rest else ""
        return PairReport(d, k, REALIZABLE, cands, note)
    return PairReport(d, k, EXCLUDED, cands, _exclusion_note(d))


def admissible_pairs(max_d: int = 7, max_k: int = 4, max_m: int = MAX_FREE_DEGREE) -> list:
    """Status of every (d, k) with 0 <= d <= max_d, 1 <= k <= max_k and 3 <= m <= max_m."""
    real = verified_realizations()
    out = []
    for d in range(max_d + 1):
        for k in range(1, max_k + 1):
            if 3 <= d + 2 * k <= max_m:
                out.append(classify_pair(d, k, real))
    return out


# -- reproduction of the classification --------------------------------------------------

CLASSIFICATION_CASES = (
    ("conic and a tangent line", (("CL3", (0, 1, 0), (1, 1)),)),
    ("conic and two tangent lines", (("CL4", (1, 2, 0), (1, 2)),)),
    ("conic inscribed in or circumscribed about a triangle",
     (("CL5", (3, 3, 0), (2, 2)), ("CL5'", (0, 0, 3), (2, 2)))),
    ("triangle with an inscribed and a circumscribed conic", (("CL7", (0, 5, 3), (3, 3)),)),
)


class ClassificationMismatch(SoundnessError):
    """A catalog arrangement does not reproduce its classification case."""


@lru_cache(maxsize=None)
def catalog_census(name, seed=0):
    """Census of a catalog entry with default primes, cached."""
    from .geometry import catalog, census

    return census(catalog(name), seed=seed)


@lru_cache(maxsize=None)
def analyze_catalog_entry(name):
    """``(arrangement, census, freeness report)`` with default seed and primes, cached."""
    from .geometry import catalog
    from .milnor import freeness

    arr = catalog(name)
    c = catalog_census(name)
    fr = freeness(arr.polynomial(), c if c.in_class else None)
    return arr, c, fr


def verify_classification(names=None) -> dict:
    """Re-derive the four free cases and check freeness is constant on weak combinatorics.

    ``names`` restricts the Terao grouping to these catalog entries (default: all
    in-class entries of degree at most 9, which is where freeness can occur).
    """
    from .geometry import catalog, names as all_names
    from .milnor import FREE

    cases = []
    for title, members in CLASSIFICATION_CASES:
        for name, counts, exps in members:
            arr, c, fr = analyze_catalog_entry(name)
            got = (c.n2, c.t, c.n3)
            diff = {}
            if got != counts:
                diff["counts"] = (counts, got)
            if fr.verdict != FREE or tuple(fr.exponents or ()) != exps:
                diff["freeness"] = ((FREE, exps), (fr.verdict, fr.exponents))
            if diff:
                raise ClassificationMismatch(f"{name} ({title}): expected vs got {diff}")
            cases.append({"case": title, "name": name, "counts": list(got), "exponents": list(exps)})
    groups = {}
    for name in names if names is not None else all_names():
        arr = catalog(name)
        if arr.m > MAX_FREE_DEGREE:
            continue
        arr, c, fr = analyze_catalog_entry(name)
        if not c.in_class:
            continue
        key = (arr.m, c.n2, c.t, c.n3)
        groups.setdefault(key, []).append((name, fr.verdict == FREE))
    for key, members in groups.items():
        if len({free for _, free in members}) > 1:
            raise ClassificationMismatch(f"weak combinatorics {key} mixes free and non-free: {members}")
    return {
        "cases": cases,
        "groups": [
            {"weak_combinatorics": list(key), "members": [n for n, _ in members], "free": members[0][1]}
            for key, members in sorted(groups.items())
        ],
    }
