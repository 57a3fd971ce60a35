"""The analysis pipeline: census, then freeness, then every applicable bound."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field as dc_field

from .bounds import bounds_report, hirzebruch_from_orbifold, spectral_window_sums
from .errors import SoundnessError
from .geometry import bezout_check, census, combinatorial_check, validate
from .geometry.arrangement import Arrangement
from .milnor import FREE, freeness
from .numbers import format_rational

VERSION = "0.1.0"


@dataclass
class AnalysisReport:
    arrangement: Arrangement
    seed: int
    census: object
    freeness: object
    bounds: object | None
    checks: dict
    timing: dict = dc_field(default_factory=dict)

    def to_json(self, with_timing: bool = False) -> dict:
        arr, c = self.arrangement, self.census
        out = {
            "version": VERSION,
            "arrangement": {
                "name": arr.name or "",
                "sha256": arr.digest(),
                "field": arr.field.label,
                "d": arr.d,
                "k": arr.k,
                "m": arr.m,
            },
            "seed": self.seed,
            "primes": list(c.primes),
            "weak_combinatorics": {"m": arr.m, "n2": c.n2, "t": c.t, "n3": c.n3} if c.in_class else None,
            "census": c.to_json(),
            "freeness": self.freeness.to_json(),
            "bounds": self.bounds.to_json() if self.bounds is not None else None,
            "checks": self.checks,
        }
        if with_timing:
            out["timing"] = {k: round(v, 3) for k, v in self.timing.items()}
        return out

    def dumps(self, with_timing: bool = False) -> str:
        return json.dumps(self.to_json(with_timing), indent=2, ensure_ascii=False) + "\n"

    def table(self) -> str:
        arr, c, fr = self.arrangement, self.census, self.freeness
        lines = [
            f"arrangement  {arr.name or '(unnamed)'}  d={arr.d} k={arr.k} m={arr.m}",
            f"census       n2={c.n2} t={c.t} n3={c.n3}  in_class={c.in_class}  primes={c.primes}",
        ]
        for p in c.out_of_class:
            lines.append(f"  out of class: {p.label} on components {list(p.incident)}")
        exps = f" exponents={fr.exponents}" if fr.exponents else ""
        lines.append(f"freeness     {fr.verdict}{exps}  mdr={fr.r}  tau={fr.tau}")
        if fr.resolution:
            lines.append(f"  {fr.resolution}")
        for note in fr.notes:
            lines.append(f"  note: {note}")
        if self.bounds is not None:
            lines.append("bounds")
            for e in self.bounds.entries:
                if not e.applicable:
                    lines.append(f"  {e.name:<24} not applicable")
                    continue
                lhs, rhs = _plain(e.lhs), _plain(e.rhs)
                mark = "ok" if e.holds else "FAILS"
                lines.append(f"  {e.name:<24} {lhs} {e.relation} {rhs}  {mark}")
        return "\n".join(lines) + "\n"


def _plain(q) -> str:
    return str(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def analyze(arr: Arrangement, primes: int = 3, seed: int = 0, exact: bool = False) -> AnalysisReport:
    """Run the pipeline. Soundness failures propagate as :class:`SoundnessError` subclasses."""
    validate(arr)
    timing = {}
    t0 = time.perf_counter()
    c = census(arr, primes=primes, seed=seed, exact=exact)
    timing["census"] = time.perf_counter() - t0
    degrees = [comp.degree for comp in arr.components]
    checks = {"bezout": bezout_check(c, degrees)}
    if not checks["bezout"]:
        raise SoundnessError("contact orders do not add up to the product of degrees")
    if c.in_class:
        checks["count_identity"] = combinatorial_check(c, arr.d, arr.k)
        windows = spectral_window_sums(c)
        checks["spectral_windows"] = {k: {"per_point": a, "closed_form": b} for k, (a, b) in windows.items()}
        if any(a != b for a, b in windows.values()):
            raise SoundnessError("per-point spectral counts disagree with their closed forms")
    t0 = time.perf_counter()
    fr = freeness(arr.polynomial(), c if c.in_class else None)
    timing["freeness"] = time.perf_counter() - t0
    if c.in_class:
        checks["tau_identity"] = {"census": c.tau, "milnor": fr.tau, "holds": c.tau == fr.tau}
    if fr.verdict == FREE:
        d1, d2 = fr.exponents
        ok = d1 * d1 + d2 * d2 + d1 * d2 == fr.tau
        checks["exponent_identity"] = {"lhs": d1 * d1 + d2 * d2 + d1 * d2, "rhs": fr.tau, "holds": ok}
        if not ok:
            raise SoundnessError("d1^2 + d1 d2 + d2^2 differs from tau")
    rep = None
    if c.in_class:
        t0 = time.perf_counter()
        rep = bounds_report(c, fr)
        derived = hirzebruch_from_orbifold(arr.d, arr.k, c)
        if derived is not None:
            checks["hirzebruch_from_orbifold"] = {
                "orbifold_slack": format_rational(derived["orbifold_slack"]),
                "hirzebruch_slack": format_rational(derived["hirzebruch_slack"]),
                "consistent": derived["consistent"],
            }
            if not derived["consistent"]:
                raise SoundnessError("Hirzebruch slack is not 16 times the orbifold slack")
        timing["bounds"] = time.perf_counter() - t0
    return AnalysisReport(arr, seed, c, fr, rep, checks, timing)
