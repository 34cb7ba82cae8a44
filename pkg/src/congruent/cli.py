"""Command-line front end: ``cn triple | pell | congruent | sweep | verify``.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 I/O error. Human-readable output goes to stdout; catalog records go to
``--out`` (``--out -`` sends records to stdout and the report to stderr).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from collections import Counter
from typing import IO, Iterator, Sequence

from . import __version__
from .catalog import (
    CERTIFIED,
    DISCREPANCY_FLAGGED,
    CatalogRecord,
    failure_record,
    family_record,
    pell_record,
    sweep_record,
    write_records,
)
from .certificate import certificate_from_json, certify, verify_certificate
from .errors import CongruentError, NotAdmissible, Unsolvable
from .families import corollary4, corollary4_certificates, remark5_variant, sweep_families
from .pell import cf_expand, negative_pell_necessary, solutions
from .pipeline import (
    closing_example,
    corollary9_build,
    theorem8,
    theorem8_sweep,
    theorem10,
    theorem10_sweep,
)
from .triples import area_congruent, corollary2_numbers, from_parameters, lemma1_transforms

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class _Usage(Exception):
    pass


def workers_from_env() -> int:
    raw = os.environ.get("CN_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise _Usage(f"CN_THREADS must be an integer, got {raw!r}")
    return os.cpu_count() or 1


@contextlib.contextmanager
def _record_sink(path: str | None, append: bool) -> Iterator[IO[str] | None]:
    if path is None:
        yield None
    elif path == "-":
        yield sys.stdout
    else:
        with open(path, "a" if append else "w", encoding="utf-8") as fh:
            yield fh


def _report_stream(args) -> IO[str]:
    return sys.stderr if getattr(args, "out", None) == "-" else sys.stdout


# triple ---------------------------------------------------------------------

def cmd_triple(args) -> int:
    tr = from_parameters((args.s, args.t))
    area = area_congruent(tr)
    out = _report_stream(args)
    print(f"triple {tr} from s={args.s}, t={args.t}", file=out)
    print(f"area {area.value}  square-free {area.squarefree}", file=out)
    records = []
    if args.derive:
        for lt in lemma1_transforms(tr):
            print(f"{lt.label} {lt.triple}", file=out)
        print("derived numbers:", file=out)
        values = corollary2_numbers(tr)
        for v in values:
            note = f"  (square factor {v.cofactor ** 2})" if v.has_square_factor else ""
            print(f"  {v.label:<6} {v.value:>8}  square-free {v.squarefree}{note}", file=out)
        congruent = sorted({area.squarefree, *(v.squarefree for v in values)})
        print("congruent (square-free): " + " ".join(map(str, congruent)), file=out)
        if args.out:
            for v in values:
                cert = certify(v.value, v.witness, "+".join(v.chain), method="corollary2")
                records.append(CatalogRecord(
                    "corollary2", {"s": str(args.s), "t": str(args.t), "value": v.label},
                    CERTIFIED, cert.n, cert, {"raw": str(v.value)}))
    with _record_sink(args.out, append=True) as sink:
        if sink is not None:
            write_records(records, sink)
    return EXIT_OK


# pell -----------------------------------------------------------------------

def cmd_pell(args) -> int:
    d = args.d
    if d < 2:
        raise _Usage(f"d must be >= 2, got {d}")
    cf = cf_expand(d)
    sign = -1 if args.negative else 1
    parity = "odd" if cf.odd_period else "even"
    period = "[" + ",".join(map(str, cf.period)) + "]"
    print(f"sqrt({d}) = {cf}")
    print(f"period {period} length {cf.period_length} {parity}")
    eq = f"x^2 - {d}y^2 = {sign}"
    try:
        sols = solutions(d, sign, max(args.count, 1))
    except Unsolvable:
        print(f"{eq}: unsolvable")
        sols = []
    else:
        print(f"{eq}: fundamental solution ({sols[0].x}, {sols[0].y})")
        for i, s in enumerate(sols[: args.count], start=1):
            print(f"  {i}: ({s.x}, {s.y})")
    if args.negative:
        diag = negative_pell_necessary(d)
        if diag.holds:
            verdict = "satisfied" + (" (non-sufficient)" if not sols else "")
        else:
            verdict = "violated by " + ", ".join(map(str, diag.violations))
        print(f"necessary condition: {verdict}")
    return EXIT_OK


# congruent ------------------------------------------------------------------

def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise _Usage(f"{args.method} needs " + ", ".join("--" + m for m in missing))


def _parse_primes(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise _Usage(f"--primes must be a comma-separated list of integers, got {text!r}")


def _congruent_records(args) -> list[CatalogRecord]:
    m = args.method
    if m in ("theorem8", "theorem10"):
        _require(args, "d")
        params = {"d": str(args.d)}
        fn = theorem8 if m == "theorem8" else theorem10
        try:
            return [pell_record(fn(args.d, relaxed=args.relaxed, index=args.index), params)]
        except (Unsolvable, NotAdmissible) as exc:
            return [failure_record(m, params, type(exc).__name__, str(exc))]
    if m == "corollary9":
        _require(args, "primes")
        primes = _parse_primes(args.primes)
        params = {"primes": ",".join(map(str, primes))}
        try:
            return [pell_record(corollary9_build(primes, index=args.index), params)]
        except Unsolvable as exc:
            return [failure_record(m, params, "Unsolvable", str(exc))]
    if m == "closing-example":
        _require(args, "y")
        return [pell_record(closing_example(args.y), {"y": str(args.y)})]
    if m == "corollary4":
        _require(args, "s", "t")
        vals = corollary4((args.s, args.t))
        certs = corollary4_certificates((args.s, args.t))
        recs = []
        for q, cert in certs.items():
            details = {"raw": str(vals.derived()[q])}
            status = CERTIFIED
            if q == "F":
                details["printed"] = str(vals.F_printed)
                details["comparison"] = vals.F_status.value
                status = CERTIFIED if vals.F_status.value != "discrepancy" else DISCREPANCY_FLAGGED
            recs.append(CatalogRecord(m, {"s": str(args.s), "t": str(args.t), "value": q},
                                      status, cert.n, cert, details))
        return recs
    if m == "remark5":
        _require(args, "x", "y")
        r = remark5_variant(args.x, args.y)
        status = DISCREPANCY_FLAGGED if r.status.value == "discrepancy" else CERTIFIED
        return [CatalogRecord(m, {"x": str(args.x), "y": str(args.y)}, status, r.squarefree,
                              r.certificate, {"derived": str(r.derived), "printed": str(r.printed),
                                              "comparison": r.status.value})]
    raise _Usage(f"unknown method {m!r}")


def cmd_congruent(args) -> int:
    records = _congruent_records(args)
    out = _report_stream(args)
    for rec in records:
        if rec.certificate is not None:
            c = rec.certificate
            print(f"{rec.method} {_fmt_params(rec.params)}: n = {rec.n} [{rec.status}] "
                  f"triangle ({c.leg1}, {c.leg2}, {c.hyp})", file=out)
            if "bonus" in rec.details:
                print(f"  x is a square: {rec.details['bonus_raw']} is congruent too "
                      f"(square-free {rec.details['bonus']})", file=out)
        else:
            print(f"{rec.method} {_fmt_params(rec.params)}: {rec.status} ({rec.details['reason']})", file=out)
    with _record_sink(args.out, append=True) as sink:
        if sink is not None:
            write_records(records, sink)
    return EXIT_OK


def _fmt_params(params: dict[str, str]) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


# sweep ----------------------------------------------------------------------

def _sweep_records(kind: str, bound: int, workers: int) -> list[CatalogRecord]:
    if kind == "families":
        return [family_record(e) for e in sweep_families(bound, workers).entries]
    if kind == "pell-neg":
        return [sweep_record("theorem8", o) for o in theorem8_sweep(bound, workers)]
    if kind == "pell-pos":
        return [sweep_record("theorem10", o) for o in theorem10_sweep(bound, workers)]
    raise _Usage(f"unknown sweep kind {kind!r}")


def cmd_sweep(args) -> int:
    if args.bound < 0:
        raise _Usage(f"bound must be >= 0, got {args.bound}")
    records = _sweep_records(args.kind, args.bound, workers_from_env())
    with _record_sink(args.out, append=False) as sink:
        if sink is not None:
            write_records(records, sink)
    counts = Counter(r.status for r in records)
    out = _report_stream(args)
    print(f"sweep {args.kind} bound={args.bound}: {len(records)} records", file=out)
    summary = {
        "certified": counts[CERTIFIED],
        "discrepancy": counts[DISCREPANCY_FLAGGED],
        "unsolvable": counts["unsolvable"],
    }
    for other in sorted(set(counts) - {CERTIFIED, DISCREPANCY_FLAGGED, "unsolvable"}):
        summary[other] = counts[other]
    print("  " + "  ".join(f"{k}={v}" for k, v in summary.items()), file=out)
    for r in records:
        if r.status == DISCREPANCY_FLAGGED:
            p = r.params
            name = f"{p['class']}{p['sub']}" if r.method == "theorem6" else r.method
            print(f"  discrepancy {name} k={p.get('k', '')}: printed {r.details.get('printed')} "
                  f"vs derived {r.details.get('derived')}", file=out)
    return EXIT_OK


# verify ---------------------------------------------------------------------

def _verify_line(obj) -> tuple[str, str]:
    """Returns (outcome, message) with outcome in pass / fail / skip."""
    if not isinstance(obj, dict):
        raise ValueError("line is not a JSON object")
    if "triangle" in obj:
        cert, claimed = certificate_from_json(obj), None
    else:
        rec = CatalogRecord.from_json(obj)
        if rec.certificate is None:
            return "skip", f"no certificate ({rec.status})"
        cert, claimed = rec.certificate, rec.n
    verdict = verify_certificate(cert)
    reasons = list(verdict.reasons)
    if claimed is not None and claimed != cert.n:
        reasons.append("record-n")
    if reasons:
        return "fail", f"n={cert.n} " + ",".join(reasons)
    return "pass", f"n={cert.n}"


def cmd_verify(args) -> int:
    with open(args.path, encoding="utf-8") as fh:
        lines = fh.readlines()
    failed = 0
    counts = Counter()
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            outcome, msg = _verify_line(json.loads(line))
        except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
            print(f"line {lineno}: malformed: {exc}", file=sys.stderr)
            return EXIT_USAGE
        counts[outcome] += 1
        print(f"line {lineno}: {outcome} {msg}")
        failed += outcome == "fail"
    print(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skip']} skipped")
    return EXIT_VERIFY if failed else EXIT_OK


# entry point ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cn", description="Constructed and certified congruent numbers.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triple", help="triple from (s, t) and its derived congruent numbers")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--derive", action="store_true", help="show the transformed triples and the five numbers")
    p.add_argument("--out", help="append corollary2 records to this file (with --derive)")
    p.set_defaults(func=cmd_triple)

    p = sub.add_parser("pell", help="continued fraction and Pell solutions for d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--negative", action="store_true", help="solve x^2 - dy^2 = -1")
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("congruent", help="one congruent number by a named construction")
    p.add_argument("method", choices=["theorem8", "theorem10", "corollary9", "closing-example",
                                      "corollary4", "remark5"])
    p.add_argument("--d", type=int)
    p.add_argument("--primes", help="comma-separated primes = 1 mod 4 (corollary9)")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--index", type=int, default=0, help="use the i-th Pell solution (0 = fundamental)")
    p.add_argument("--relaxed", action="store_true", help="allow d outside the stated hypotheses")
    p.add_argument("--out", help="append records to this file, '-' for stdout")
    p.set_defaults(func=cmd_congruent)

    p = sub.add_parser("sweep", help="catalog a whole range")
    p.add_argument("kind", choices=["families", "pell-neg", "pell-pos"])
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--out", help="write records to this file, '-' for stdout")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="check every certificate in a JSON-lines file")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (_Usage, CongruentError) as exc:
        print(f"cn {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"cn {args.command}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
