"""Command-line front end: ``iwasawa roots|present|dims|verify``.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import CartanTypeError, PrimeTooSmallError, ResourceCapError
from .grading import graded_dim_omega
from .ordering import NotReducedError
from .presentation import build_presentation, check_prime, export_presentation
from .roots import build_root_system, format_root
from .straighten import DEFAULT_WORD_CAP, Rewriter, graded_dim_upper_bound
from .suites import SUITES, RunConfig, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
OUT_DIR_ENV = "IWASAWA_OUT_DIR"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _common(p: argparse.ArgumentParser, prime=True):
    p.add_argument("--type", required=True, help="Cartan type, e.g. A2, B2, G2")
    if prime:
        p.add_argument("-p", type=int, required=True, help="prime, must exceed h + 1")
    p.add_argument("--json", action="store_true", help="print JSON instead of text")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="iwasawa", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("roots", help="positive roots, heights and the Coxeter number")
    _common(r, prime=False)

    pr = sub.add_parser("present", help="materialise the relations and export them")
    _common(pr)
    pr.add_argument("-k", "--precision", type=int, default=1)
    pr.add_argument("--max-degree", type=int, default=None, help="truncation degree N (default 2h)")
    pr.add_argument("--word", default=None, help="reduced word for w0, e.g. 121 (1-based)")
    pr.add_argument("--format", choices=("json", "text"), default=None)
    pr.add_argument("--out", default=None, help=f"output file (relative paths go under ${OUT_DIR_ENV})")

    d = sub.add_parser("dims", help="dim gr^n against the rewriter rank")
    _common(d)
    d.add_argument("--max-degree", type=int, required=True)
    d.add_argument("--upper-bound", action="store_true", help="also compute the rewriter rank")
    d.add_argument("--word-cap", type=int, default=DEFAULT_WORD_CAP)

    v = sub.add_parser("verify", help="run verification suites")
    _common(v)
    v.add_argument("-k", "--precision", type=int, default=1)
    v.add_argument("--max-degree", type=int, default=None)
    v.add_argument("--suite", action="append", default=None,
                   help=f"one of {', '.join(SUITES)} or all (repeatable, comma-separated)")
    v.add_argument("--samples", type=int, default=1000, help="random words for inversions/confluence")
    v.add_argument("--max-word-weight", type=int, default=6)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--word-cap", type=int, default=DEFAULT_WORD_CAP)
    v.add_argument("--words", type=int, default=3, help="reduced words tried by the ordering suite")
    v.add_argument("--out", default=None, help="also write the JSON report here")
    return ap


def _out_path(name):
    path = Path(name)
    base = os.environ.get(OUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def _parse_word(text):
    if text is None:
        return None
    digits = [c for c in text if c.isdigit()]
    if not digits or len(digits) != len(text.replace(",", "").replace(" ", "")):
        raise ValueError(f"bad reduced word {text!r}")
    return tuple(int(c) - 1 for c in digits)


def cmd_roots(args):
    rs = build_root_system(args.type)
    if args.json:
        doc = {
            "type": str(rs.cartan_type),
            "rank": rs.rank,
            "cartanMatrix": [list(r) for r in rs.cartan_matrix],
            "positiveRoots": [{"root": list(a), "height": rs.height(a)} for a in rs.positive_roots],
            "highestRoot": list(rs.highest_root),
            "coxeterNumber": rs.coxeter_number,
        }
        print(json.dumps(doc, sort_keys=True, indent=1))
        return EXIT_OK
    print(f"type {rs.cartan_type}  rank {rs.rank}  |Phi+| = {len(rs.positive_roots)}  h = {rs.coxeter_number}")
    print(f"{'root':>20}  height")
    for a in rs.positive_roots:
        print(f"{format_root(a):>20}  {rs.height(a):>6}")
    print(f"highest root {format_root(rs.highest_root)}")
    return EXIT_OK


def cmd_present(args):
    pres = build_presentation(args.type, args.p, K=args.precision, N=args.max_degree, word=_parse_word(args.word))
    fmt = args.format or ("json" if args.json or (args.out or "").endswith(".json") else "text")
    doc = export_presentation(pres, fmt)
    if args.out:
        path = _out_path(args.out)
        path.write_text(doc)
        print(f"wrote {path} ({len(pres.relations)} relations, d = {pres.table.d})")
    else:
        sys.stdout.write(doc)
    return EXIT_OK


def cmd_dims(args):
    rs = build_root_system(args.type)
    check_prime(rs, args.p)
    if args.max_degree < 0:
        raise ValueError("--max-degree must be nonnegative")
    rw = Rewriter.for_type(rs, args.p)
    rows = []
    for n in range(args.max_degree + 1):
        row = {"n": n, "dimOmega": graded_dim_omega(rw.table, n)}
        if args.upper_bound:
            r = graded_dim_upper_bound(rw, n, args.word_cap)
            row.update(rank=r.rank, words=r.words, match=r.rank == row["dimOmega"])
        rows.append(row)
    ok = all(r.get("match", True) for r in rows)
    if args.json:
        print(json.dumps({"type": str(rs.cartan_type), "p": args.p, "rows": rows, "passed": ok},
                         sort_keys=True, indent=1))
    else:
        print(f"type {rs.cartan_type}  p = {args.p}")
        if args.upper_bound:
            print(f"{'n':>3}  {'dim gr^n':>9}  {'rank':>9}  match")
            for r in rows:
                print(f"{r['n']:>3}  {r['dimOmega']:>9}  {r['rank']:>9}  {'yes' if r['match'] else 'NO'}")
        else:
            print(f"{'n':>3}  {'dim gr^n':>9}")
            for r in rows:
                print(f"{r['n']:>3}  {r['dimOmega']:>9}")
    return EXIT_OK if ok else EXIT_FAIL


def _suites(raw):
    if not raw:
        return SUITES
    names = [s.strip() for item in raw for s in item.split(",") if s.strip()]
    if "all" in names:
        return SUITES
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite {unknown[0]!r}; choose from {', '.join(SUITES)} or all")
    return tuple(dict.fromkeys(names))


def cmd_verify(args):
    rs = build_root_system(args.type)
    check_prime(rs, args.p)
    if args.precision < 1:
        raise ValueError("precision must be at least 1")
    cfg = RunConfig(str(rs.cartan_type), args.p, args.precision, args.max_degree, _suites(args.suite),
                    args.samples, args.max_word_weight, args.seed, args.word_cap, args.words)
    report = run_suites(cfg)
    doc = report.to_dict()
    if args.out:
        _out_path(args.out).write_text(json.dumps(doc, sort_keys=True, indent=1) + "\n")
    if args.json:
        print(json.dumps(doc, sort_keys=True, indent=1))
    else:
        print(f"type {cfg.type}  p = {cfg.p}  precision = {cfg.K}  max degree = {doc['config']['maxDegree']}")
        for name, recs in report.suites.items():
            bad = [r for r in recs if not r.passed]
            status = "PASS" if not bad else "FAIL"
            print(f"  {name:11} {status}  {len(recs) - len(bad)}/{len(recs)}  ({report.timing[name]:.2f}s)")
            for r in bad[:10]:
                print(f"      {r.name} {r.instance}: {r.witness}")
        print("overall:", "PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_FAIL


COMMANDS = {"roots": cmd_roots, "present": cmd_present, "dims": cmd_dims, "verify": cmd_verify}


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except PrimeTooSmallError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (CartanTypeError, NotReducedError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
