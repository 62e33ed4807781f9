"""Command-line front end.

Subcommands: word, count, verify, satotate, cm, quartic-tables.
Exit codes: 0 all passed, 1 some verification failed, 2 usage or domain
error.  Verification streams are JSONL (default) or CSV with fixed key
order; records are emitted in ascending p regardless of --jobs, and
nothing time-dependent is written to stdout, so outputs are byte-identical
across runs.  The run manifest goes to stderr.
"""

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone

from .errors import ResidueLabError
from .modarith import build_context
from .patterns import count_pattern, jacobsthal, residue_word
from .quadgraphs import GraphClass, count_graph_classes
from .records import RunManifest
from .claims import CLAIMS, _verify_worker, cm_payload, eligible_primes
from . import curves, k3, stats

_FILTERS = {"1mod4": (1, 4), "3mod4": (3, 4), "none": None}

_COUNT_OBJECTS = ("pattern", "graph", "k3-M", "k3-N", "k3-S",
                  "k3-Xprime", "k3-Xprime0", "edwards", "jacobsthal")


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("RESIDUE_LAB_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="residue-lab",
        description="Quadratic-residue pattern counts and their verification "
                    "against brute-force point counting.")
    sub = parser.add_subparsers(dest="command", required=True)

    w = sub.add_parser("word", help="print the residue word for p")
    w.add_argument("-p", type=int, required=True)

    c = sub.add_parser("count", help="one counting query, JSON output")
    c.add_argument("object", choices=_COUNT_OBJECTS)
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-S", "--pattern", help="pattern over X/Y for object=pattern")
    c.add_argument("--class", dest="graph_class",
                   choices=[g.value for g in GraphClass],
                   help="class name for object=graph")

    v = sub.add_parser("verify", help="run one claim over a prime range")
    v.add_argument("claim", choices=sorted(CLAIMS))
    v.add_argument("--min-p", type=int, default=3)
    v.add_argument("--max-p", type=int, required=True)
    v.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: RESIDUE_LAB_JOBS or 1)")
    v.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    v.add_argument("--out", help="write records here instead of stdout")
    v.add_argument("--filter", choices=sorted(_FILTERS), default="none",
                   help="extra residue-class restriction on top of the claim's own")
    v.add_argument("--oracle", action="store_true",
                   help="rebuild root-count tables by enumeration instead of "
                        "the character table")

    s = sub.add_parser("satotate", help="normalized-trace distribution report")
    s.add_argument("curve", choices=stats.curve_ids())
    s.add_argument("--max-p", type=int, required=True)
    s.add_argument("--filter", choices=sorted(_FILTERS), default="none")
    s.add_argument("--out", help="write the 40-bin histogram CSV here")

    g = sub.add_parser("cm", help="both normalized a^2 + b^2 = p decompositions")
    g.add_argument("-p", type=int, required=True)

    q = sub.add_parser("quartic-tables", help="the four quartic twist rows at p")
    q.add_argument("-p", type=int, required=True)
    return parser


def _cmd_word(args) -> int:
    ctx = build_context(args.p)
    print(residue_word(ctx))
    return 0


def _cmd_count(args) -> int:
    ctx = build_context(args.p)
    obj = {"p": args.p, "object": args.object}
    if args.object == "pattern":
        if not args.pattern:
            raise ValueError("object=pattern needs -S")
        obj["pattern"] = args.pattern.upper()
        obj["count"] = count_pattern(ctx, args.pattern)
    elif args.object == "graph":
        if not args.graph_class:
            raise ValueError("object=graph needs --class")
        counts = count_graph_classes(ctx)
        obj["class"] = args.graph_class
        obj["count"] = counts[GraphClass(args.graph_class)]
    elif args.object == "k3-M":
        obj["count"] = k3.count_Mp(ctx)
    elif args.object == "k3-N":
        obj["count"] = k3.count_Np(ctx)
    elif args.object == "k3-S":
        obj["count"] = k3.count_S(ctx)
    elif args.object == "k3-Xprime":
        obj["count"] = k3.count_Xprime(ctx)[0]
    elif args.object == "k3-Xprime0":
        obj["count"] = k3.count_Xprime(ctx)[1]
    elif args.object == "edwards":
        obj["count"] = curves.edwards_affine(ctx)
    elif args.object == "jacobsthal":
        obj["count"] = jacobsthal(ctx)
    print(json.dumps(obj, separators=(",", ":")))
    return 0


def _emit_records(records: list[dict], fmt: str, out_path: str | None) -> None:
    if fmt == "jsonl":
        text = "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in records)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["p", "claim", "expected", "actual", "pass", "detail"])
        for r in records:
            writer.writerow([
                r["p"], r["claim"],
                json.dumps(r["expected"], separators=(",", ":")),
                json.dumps(r["actual"], separators=(",", ":")),
                str(r["pass"]).lower(),
                json.dumps(r.get("detail"), separators=(",", ":")),
            ])
        text = buf.getvalue()
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_verify(args) -> int:
    claim = CLAIMS[args.claim]
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    if args.min_p > args.max_p:
        raise ValueError(f"empty range [{args.min_p}, {args.max_p}]")
    primes = eligible_primes(claim, args.min_p, args.max_p, _FILTERS[args.filter])
    manifest = RunManifest(
        command=" ".join(sys.argv[1:]) or args.claim,
        claim=args.claim, min_p=args.min_p, max_p=args.max_p, jobs=jobs,
        started=datetime.now(timezone.utc).isoformat())
    tasks = [(args.claim, p, args.oracle) for p in primes]
    if jobs > 1 and len(tasks) > 1:
        chunk = max(1, len(tasks) // (8 * jobs))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_verify_worker, tasks, chunksize=chunk))
    else:
        records = [_verify_worker(t) for t in tasks]
    records.sort(key=lambda r: r["p"])
    _emit_records(records, args.format, args.out)
    manifest.finished = datetime.now(timezone.utc).isoformat()
    manifest.total = len(records)
    manifest.passed = sum(1 for r in records if r["pass"])
    manifest.failed = manifest.total - manifest.passed
    print(manifest.to_json(), file=sys.stderr)
    failures = [r["p"] for r in records if not r["pass"]]
    if failures:
        print(f"FAILED {args.claim} at p = {failures}", file=sys.stderr)
        return 1
    return 0


def _cmd_satotate(args) -> int:
    report = stats.st_report(args.curve, args.max_p, _FILTERS[args.filter])
    obj = {
        "curve": report.curve,
        "max_p": report.max_p,
        "filter": args.filter,
        "sample_count": report.sample_count,
        "skipped": report.skipped,
        "ks_uniform": report.ks_uniform,
        "ks_semicircle": report.ks_semicircle,
    }
    print(json.dumps(obj, separators=(",", ":")))
    if args.out:
        total = max(report.sample_count, 1)
        with open(args.out, "w") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["bin_lo", "bin_hi", "count", "density"])
            for lo, hi, count in report.histogram:
                writer.writerow([f"{lo:.6f}", f"{hi:.6f}", count,
                                 f"{count / (total * (hi - lo)):.8f}"])
    return 0


def _cmd_cm(args) -> int:
    print(json.dumps(cm_payload(args.p), separators=(",", ":")))
    return 0


def _cmd_quartic_tables(args) -> int:
    ctx = build_context(args.p)
    for variant in (1, 2, 3, 4):
        rec = curves.quartic_row(ctx, variant)
        obj = {"p": rec.p, "variant": variant, "curve": rec.curve,
               "affine": rec.affine_count, "infinity": rec.infinity_count,
               "zero_locus": rec.zero_locus_count,
               "sum": rec.infinity_count + rec.zero_locus_count,
               "trace": rec.trace}
        print(json.dumps(obj, separators=(",", ":")))
    return 0


_DISPATCH = {
    "word": _cmd_word,
    "count": _cmd_count,
    "verify": _cmd_verify,
    "satotate": _cmd_satotate,
    "cm": _cmd_cm,
    "quartic-tables": _cmd_quartic_tables,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (ResidueLabError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
