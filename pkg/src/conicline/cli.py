"""Command-line front end.

Exit codes: 0 success, 1 a reproduction criterion failed, 2 bad input
(unparsable or invalid arrangement, unknown catalog name, unreadable file),
3 an internal soundness gate fired.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction

from . import verify
from .bounds import A1, A3, D4, CentralMultiple, deg_B, spectrum
from .classify import MAX_FREE_DEGREE, admissible_pairs, classify_pair, survivors, verify_classification
from .errors import SoundnessError, UnknownName, ValidationError
from .geometry import catalog, expected, load, names
from .numbers import format_rational
from .report import analyze

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_SOUNDNESS = 3

SEED_ENV = "CLL_SEED"


def write_atomic(path: str, text: str) -> None:
    """Write via a temporary file in the same directory, then rename over ``path``."""
    folder = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=folder, prefix=".conicline-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, output: str | None) -> None:
    if output:
        write_atomic(output, text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def effective_seed(cli_seed: int) -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw.strip() == "":
        return cli_seed
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


# -- commands --------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    if (args.path is None) == (args.catalog is None):
        raise ValidationError("give exactly one of a path or --catalog NAME")
    arr = catalog(args.catalog) if args.catalog else load(args.path)
    if args.primes < 1:
        raise ValidationError("--primes must be at least 1")
    rep = analyze(arr, primes=args.primes, seed=effective_seed(args.seed), exact=args.exact)
    text = rep.dumps(with_timing=args.timing) if args.format == "json" else rep.table()
    _emit(text, args.output)
    return EXIT_OK


def _pair_rows(reports):
    lines = []
    for r in reports:
        lines.append(f"(d, k) = ({r.d}, {r.k})  m={r.d + 2 * r.k}  {r.status}  {r.note}".rstrip())
        for c in r.candidates:
            tag = "survives" if c.survives else "pruned by " + ", ".join(c.pruned_by)
            real = f"  realized by {c.realization}" if c.realization else ""
            lines.append(f"    n2={c.n2} t={c.t} n3={c.n3} d1={c.d1} d2={c.d2}  {tag}{real}")
    return "\n".join(lines) + "\n"


def cmd_enumerate(args) -> int:
    if args.max_m is not None:
        if args.d is not None or args.k is not None:
            raise ValidationError("--max-m cannot be combined with --d/--k")
        if args.max_m < 3:
            raise ValidationError("--max-m must be at least 3")
        reports = admissible_pairs(max_d=args.max_m, max_k=args.max_m // 2, max_m=args.max_m)
        horizon = max(args.max_m, MAX_FREE_DEGREE) + 6
        beyond = [
            [m - 2 * k, k]
            for m in range(args.max_m + 1, horizon + 1)
            for k in range(1, m // 2 + 1)
            if survivors(m - 2 * k, k)
        ]
    else:
        if args.d is None or args.k is None:
            raise ValidationError("give both --d and --k, or --max-m")
        if args.d < 0 or args.k < 0 or args.d + 2 * args.k < 3:
            raise ValidationError("need d, k >= 0 and d + 2k >= 3")
        reports = [classify_pair(args.d, args.k)]
        beyond = None
    if args.format == "table":
        text = _pair_rows(reports)
        if beyond is not None:
            text += f"survivors beyond m={args.max_m} (checked up to m={horizon}): {beyond or 'none'}\n"
    else:
        body = {"pairs": [r.to_json() for r in reports]}
        if beyond is not None:
            body["beyond"] = {"max_m": args.max_m, "checked_up_to": horizon, "pairs_with_survivors": beyond}
        text = _dumps(body)
    _emit(text, args.output)
    return EXIT_OK


def cmd_classify(args) -> int:
    reports = admissible_pairs()
    rep = verify_classification()
    if args.format == "table":
        text = _pair_rows([r for r in reports if r.survivors])
        text += "reproduced cases:\n"
        text += "".join(f"    {c['name']}: {c['case']}\n" for c in rep["cases"])
    else:
        text = _dumps({"pairs": [r.to_json() for r in reports], **rep})
    _emit(text, args.output)
    return EXIT_OK


_NAMED_TYPES = {"A1": A1, "A3": A3, "D4": D4}


def parse_singtype(text: str):
    if text in _NAMED_TYPES:
        return _NAMED_TYPES[text]
    head, _, tail = text.partition(":")
    if head.lower() == "central" and tail.isdigit() and int(tail) >= 2:
        return CentralMultiple(int(tail))
    raise ValidationError(f"unknown singularity type {text!r}; use A1, A3, D4 or central:M with M >= 2")


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"not a rational number: {text!r}") from None


def cmd_spectrum(args) -> int:
    s = parse_singtype(args.type)
    sp = spectrum(s)
    body = {"type": str(s), "mu": s.mu, "spectrum": sp.to_json()}
    if (args.lo is None) != (args.hi is None):
        raise ValidationError("--lo and --hi go together")
    if args.lo is not None:
        lo, hi = _parse_rational(args.lo), _parse_rational(args.hi)
        if not lo < hi:
            raise ValidationError("need --lo < --hi")
        body["window"] = {"lo": format_rational(lo), "hi": format_rational(hi), "count": deg_B(sp, lo, hi)}
    if args.format == "table":
        text = f"{body['type']}  mu={body['mu']}  {sp!r}\n"
        if "window" in body:
            w = body["window"]
            text += f"spectral numbers in ({w['lo']}, {w['hi']}]: {w['count']}\n"
    else:
        text = _dumps(body)
    _emit(text, args.output)
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in names():
            arr = catalog(name)
            print(f"{name:<28} d={arr.d:<2} k={arr.k:<2} m={arr.m:<3} {expected(name).note}")
        return EXIT_OK
    if not args.name:
        raise ValidationError(f"catalog {args.action} needs a NAME")
    arr = catalog(args.name)
    if args.action == "show":
        ex = expected(args.name)
        body = {
            "arrangement": arr.to_json_dict(),
            "expected": {
                "counts": list(ex.counts) if ex.counts else None,
                "verdict": ex.verdict,
                "exponents": list(ex.exponents) if ex.exponents else None,
                "note": ex.note,
            },
        }
        _emit(_dumps(body), args.output)
    else:
        _emit(arr.dumps(), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    chosen = verify.selected(args.filter)
    if not chosen:
        raise ValidationError(f"--filter {args.filter!r} matches no criterion")
    results = verify.run(args.filter, verbose=args.verbose, stream=sys.stdout)
    total = sum(r.seconds for r in results)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed in {total:.1f} s")
    return EXIT_FAILED if failed else EXIT_OK


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="conicline", description="Freeness of conic-line arrangements.")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("json", "table"), default="json")
        sp.add_argument("--output", "-o", help="write to this file (atomically) instead of stdout")

    a = sub.add_parser("analyze", help="census, freeness and bounds for one arrangement")
    a.add_argument("path", nargs="?", help="arrangement JSON file")
    a.add_argument("--catalog", metavar="NAME", help="use a built-in arrangement")
    a.add_argument("--primes", type=int, default=3, help="number of primes for the census (default 3)")
    a.add_argument("--seed", type=int, default=0, help=f"prime selection seed (default 0; {SEED_ENV} overrides)")
    a.add_argument("--exact", action="store_true", help="also run the exact census where possible")
    a.add_argument("--timing", action="store_true", help="include wall-clock timings in the JSON")
    fmt(a)
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", help="candidate weak combinatorics with prune audit trail")
    e.add_argument("--d", type=int)
    e.add_argument("--k", type=int)
    e.add_argument("--max-m", type=int, dest="max_m")
    fmt(e)
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("classify", help="status of every admissible (d, k) and the reproduced free cases")
    fmt(c)
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("spectrum", help="spectrum of a singularity type")
    s.add_argument("type", help="A1, A3, D4 or central:M")
    s.add_argument("--lo", help="window lower end (exclusive), e.g. 1/3")
    s.add_argument("--hi", help="window upper end (inclusive), e.g. 4/3")
    fmt(s)
    s.set_defaults(func=cmd_spectrum)

    g = sub.add_parser("catalog", help="built-in arrangements")
    g.add_argument("action", choices=("list", "show", "export"))
    g.add_argument("name", nargs="?")
    g.add_argument("--output", "-o")
    g.set_defaults(func=cmd_catalog)

    v = sub.add_parser("reproduce", aliases=["verify-paper"], help="run the reproduction criteria")
    v.add_argument("--filter", help="comma-separated criterion numbers or name fragments")
    v.add_argument("--verbose", "-v", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SoundnessError as exc:
        print(f"soundness failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SOUNDNESS
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for issue in exc.issues:
            if issue is not exc:
                print(f"  - {issue}", file=sys.stderr)
        return EXIT_INPUT
    except UnknownName as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
