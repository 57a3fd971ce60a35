"""Reproduction harness: the acceptance criteria as runnable checks.

Each criterion is a function returning a list of ``(ok, message)`` pairs; it
passes when every pair is ok and nothing raises. :func:`run` executes a
filtered selection and records the time taken by each criterion.
"""

from __future__ import annotations

import random
import time
import traceback
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .bounds import (
    A1,
    A3,
    D4,
    CentralMultiple,
    bounds_report,
    deg_B,
    monomial_spectrum,
    spectrum,
    thom_sebastiani,
)
from .classify import (
    EMPTY,
    EXCLUDED,
    REALIZABLE,
    admissible_pairs,
    analyze_catalog_entry,
    catalog_census,
    enumerate_candidates,
    enumerate_naive,
    survivors,
    verify_classification,
)
from .geometry import bezout_check, catalog, census, combinatorial_check, names
from .milnor import FREE, NEARLY_FREE, freeness
from .numbers import QQ
from .poly import HomPoly, monomial_basis, partials

FREENESS_TABLE = {
    "CL3": (FREE, (1, 1)),
    "CL4": (FREE, (1, 2)),
    "CL5": (FREE, (2, 2)),
    "CL5'": (FREE, (2, 2)),
    "CL7": (FREE, (3, 3)),
    "dual-hesse": (FREE, (4, 4)),
    "CL1": (FREE, (2, 3)),
    "CL2": (NEARLY_FREE, None),
}
FREENESS_SECONDS = 10.0

CENSUS_TABLE = {
    "CL3": (0, 1, 0),
    "CL4": (1, 2, 0),
    "CL5": (3, 3, 0),
    "CL5'": (0, 0, 3),
    "CL7": (0, 5, 3),
    "dual-hesse": (0, 0, 12),
    "CL1": None,
    "CL2": None,
}
CENSUS_SEEDS = range(5)

LARGE_INSTANCES = ("12-generic-lines", "6-generic-conics", "6-conics-3-bitangent-pairs")
MAX_FREE_DEGREE = 9


@dataclass
class Outcome:
    number: int
    name: str
    passed: bool
    seconds: float
    details: list = dc_field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number} {self.name} ({self.seconds:.1f} s)"


def _small_in_class():
    """In-class catalog entries of degree at most 9."""
    out = []
    for name in names():
        if catalog(name).m > MAX_FREE_DEGREE:
            continue
        arr, c, fr = analyze_catalog_entry(name)
        if c.in_class:
            out.append((name, arr, c, fr))
    return out


# -- criteria --------------------------------------------------------------------------

def criterion_freeness():
    out = []
    for name, (verdict, exps) in FREENESS_TABLE.items():
        arr = catalog(name)
        t0 = time.perf_counter()
        c = census(arr)
        fr = freeness(arr.polynomial(), c if c.in_class else None)
        secs = time.perf_counter() - t0
        got = (fr.verdict, tuple(fr.exponents) if fr.exponents else None)
        out.append((got == (verdict, exps), f"{name}: expected {verdict} {exps}, got {got[0]} {got[1]}"))
        out.append((secs < FREENESS_SECONDS, f"{name}: {secs:.2f} s (limit {FREENESS_SECONDS:.0f} s)"))
    return out


def criterion_census():
    out = []
    for name, counts in CENSUS_TABLE.items():
        arr = catalog(name)
        sigs = set()
        for seed in CENSUS_SEEDS:
            c = catalog_census(name, seed)
            sigs.add(repr(c.signature()))
            if counts is not None:
                out.append((c.in_class and c.counts == counts, f"{name} seed {seed}: {c.counts}"))
            else:
                bad = c.out_of_class
                ok = (
                    len(bad) == 1
                    and bad[0].multiplicity == 4
                    and bad[0].coords is not None
                    and tuple(bad[0].coords) == (0, 0, 1)
                )
                out.append((ok, f"{name} seed {seed}: out-of-class points {[(p.label, p.coords) for p in bad]}"))
        out.append((len(sigs) == 1, f"{name}: {len(sigs)} distinct census signature(s) over {len(CENSUS_SEEDS)} seeds"))
    return out


def criterion_identities():
    out = []
    for name in names():
        arr = catalog(name)
        c = catalog_census(name)
        if not c.in_class:
            continue
        chk = combinatorial_check(c, arr.d, arr.k)
        out.append((chk["holds"], f"{name}: 4C(k,2)+2kd+C(d,2) = {chk['lhs']} = n2+2t+3n3 = {chk['rhs']}"))
        out.append((c.tau == c.n2 + 3 * c.t + 4 * c.n3, f"{name}: census tau {c.tau}"))
    for name, arr, c, fr in _small_in_class():
        out.append((fr.tau == c.tau, f"{name}: Milnor-algebra tau {fr.tau} vs census tau {c.tau}"))
        if fr.verdict == FREE:
            d1, d2 = fr.exponents
            m = arr.m
            ok = d1 + d2 == m - 1 and d1 * d2 == (m - 1) ** 2 - fr.tau
            out.append((ok, f"{name}: d1 + d2 = {d1 + d2}, d1 d2 = {d1 * d2}, (m-1)^2 - tau = {(m - 1) ** 2 - fr.tau}"))
    return out


def criterion_bounds():
    out = []
    _, c7, fr7 = analyze_catalog_entry("CL7")
    e = bounds_report(c7, fr7)["t_plus_n3_bound"]
    out.append((e.lhs == 8 and e.rhs == 10 and e.holds, f"CL7: t + n3 = {e.lhs} <= {e.rhs}"))
    _, ch, frh = analyze_catalog_entry("dual-hesse")
    e = bounds_report(ch, frh)["triple_point_bound"]
    out.append((e.lhs == 12 and e.rhs == 15 and e.holds, f"dual-hesse: n3 = {e.lhs} <= {e.rhs}"))
    for name in names():
        arr = catalog(name)
        c = catalog_census(name)
        if not c.in_class:
            continue
        e = bounds_report(c)["tau_spectral_bound"]
        out.append((e.holds, f"{name}: n2 + 3t + 4n3 = {e.lhs} <= {e.rhs}"))
    for name in LARGE_INSTANCES:
        rep = bounds_report(catalog_census(name))
        for key in ("hirzebruch", "orbifold_my"):
            e = rep[key]
            out.append((e.applicable and e.holds, f"{name}: {key} {e.lhs} {e.relation} {e.rhs}"))
    return out


def criterion_classification():
    out = []
    table = admissible_pairs(max_d=7, max_k=4, max_m=MAX_FREE_DEGREE)
    realizable = {(r.d, r.k) for r in table if r.status == REALIZABLE}
    want = {(1, 1), (2, 1), (3, 1), (3, 2)}
    out.append((realizable == want, f"realizable (d, k): {sorted(realizable)}"))
    realized = {
        (r.d, r.k, c.n2, c.t, c.n3) for r in table if r.d <= 3 for c in r.survivors if c.realization
    }
    want_counts = {(1, 1, 0, 1, 0), (2, 1, 1, 2, 0), (3, 1, 3, 3, 0), (3, 1, 0, 0, 3), (3, 2, 0, 5, 3)}
    out.append((realized == want_counts, f"realized survivors with d <= 3: {sorted(realized)}"))
    for r in table:
        if 4 <= r.d <= 7:
            out.append((r.status in (EXCLUDED, EMPTY), f"(d, k) = ({r.d}, {r.k}): {r.status}"))
    late = [(m - 2 * k, k) for m in range(MAX_FREE_DEGREE + 1, 16) for k in range(m // 2 + 1) if survivors(m - 2 * k, k)]
    out.append((not late, f"(d, k) with m > 9 and survivors: {late}"))
    rep = verify_classification()
    out.append((len(rep["cases"]) == 5, f"classification cases reproduced: {[c['name'] for c in rep['cases']]}"))
    out.append((True, f"weak-combinatorics groups: {len(rep['groups'])}, freeness constant in each"))
    return out


def _random_form(rng, deg):
    coeffs = {e: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for e in monomial_basis(deg)}
    return HomPoly(coeffs, deg, QQ)


def euler_relation_holds(f: HomPoly) -> bool:
    x, y, z = (HomPoly.variable(i, QQ) for i in range(3))
    fx, fy, fz = partials(f)
    return x * fx + y * fy + z * fz == f.deg * f


def criterion_properties():
    out = []
    rng = random.Random(0)
    bad = [n for n in range(500) if not euler_relation_holds(_random_form(rng, rng.randint(1, 6)))]
    out.append((not bad, f"Euler relation on 500 random forms: {len(bad)} failures"))
    types = [A1, A3, D4] + [CentralMultiple(m) for m in range(2, 13)]
    for s in types:
        sp = spectrum(s)
        ok = sp.is_symmetric() and sp.total == s.mu and all(0 < a < 2 for a, _ in sp.entries)
        out.append((ok, f"{s}: symmetric about 1, total {sp.total} = mu {s.mu}"))
        if s.name == "Central":
            ts = thom_sebastiani(monomial_spectrum(s.m), monomial_spectrum(s.m))
            out.append((ts == sp, f"{s}: closed form equals Sp(x^m) + Sp(y^m)"))
    out.append((spectrum(CentralMultiple(3)) == spectrum(D4), "CentralMultiple(3) = Sp(D4)"))
    mid = tuple(deg_B(spectrum(s), Fraction(1, 3), Fraction(4, 3)) for s in (A1, A3, D4))
    low = tuple(deg_B(spectrum(s), Fraction(-1, 3), Fraction(2, 3)) for s in (A1, A3, D4))
    out.append((mid == (1, 3, 4), f"deg_B over (1/3, 4/3]: {mid}"))
    out.append((low == (0, 0, 1), f"deg_B over (-1/3, 2/3]: {low}"))
    for name in names():
        arr = catalog(name)
        c = catalog_census(name)
        ok = bezout_check(c, [comp.degree for comp in arr.components])
        out.append((ok, f"{name}: contact orders per component pair sum to the product of degrees"))
    for name, arr, c, fr in _small_in_class():
        out.append((fr.routes.get("tjurina") == fr.routes["saturation"], f"{name}: routes {fr.routes}"))
    for m in range(3, MAX_FREE_DEGREE + 1):
        for k in range(m // 2 + 1):
            d = m - 2 * k
            same = {c.key() for c in enumerate_candidates(d, k)} == enumerate_naive(d, k)
            out.append((same, f"enumeration oracle (d, k) = ({d}, {k})"))
    return out


def criterion_determinism():
    from .report import analyze

    out = []
    for name in ("CL7", "CL2"):
        a = analyze(catalog(name), seed=0).dumps()
        b = analyze(catalog(name), seed=0).dumps()
        out.append((a == b, f"{name}: two runs with seed 0 give {'identical' if a == b else 'different'} JSON"))
    return out


CRITERIA = (
    (1, "freeness", criterion_freeness),
    (2, "census", criterion_census),
    (3, "identities", criterion_identities),
    (4, "bounds", criterion_bounds),
    (5, "classification", criterion_classification),
    (6, "properties", criterion_properties),
    (7, "determinism", criterion_determinism),
)


def selected(filter_text: str | None = None):
    if not filter_text:
        return list(CRITERIA)
    keys = [f.strip() for f in filter_text.split(",") if f.strip()]
    return [c for c in CRITERIA if any(k == str(c[0]) or k in c[1] for k in keys)]


def run(filter_text: str | None = None, verbose: bool = False, stream=None) -> list:
    results = []
    for number, name, fn in selected(filter_text):
        t0 = time.perf_counter()
        try:
            details = fn()
            passed = all(ok for ok, _ in details)
        except Exception:  # noqa: BLE001 - a crash is a failed criterion, with its traceback
            details = [(False, traceback.format_exc())]
            passed = False
        res = Outcome(number, name, passed, time.perf_counter() - t0, details)
        results.append(res)
        if stream is not None:
            print(res.line(), file=stream, flush=True)
            for ok, msg in details:
                if verbose or not ok:
                    print(f"    {'ok ' if ok else 'BAD'} {msg}", file=stream)
    return results
