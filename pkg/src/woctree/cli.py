"""Command-line front end: ``woctree {count,enumerate,series,verify}``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import engines, series, verify
from .treesim import DEFAULT_FRONTIER_CAP, ENUMERATION_KINDS, FrontierLimitError, enumerate_leaves

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
COLUMNS = ("n", "a", "delta", "b", "w")


class UsageError(Exception):
    pass


def _num(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _emit(fmt: str, header, rows, extra=None) -> str:
    if fmt == "json":
        doc = dict(extra or {})
        doc["rows"] = [{k: (v if isinstance(v, bool) else str(v)) for k, v in zip(header, r)}
                       for r in rows]
        return json.dumps(doc, sort_keys=True) + "\n"
    lines = ["\t".join(header)]
    for r in rows:
        lines.append("\t".join(str(v).lower() if isinstance(v, bool) else str(v) for v in r))
    return "\n".join(lines) + "\n"


def _pattern(args):
    try:
        return engines.resolve_condition(args.condition)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_count(args, out) -> int:
    p = _pattern(args)
    if args.n_max < 1:
        raise UsageError("--n-max must be >= 1")
    names = engines.ENGINES if args.engine == "all" else (args.engine,)
    if args.engine == "all":
        # drop engines that have nothing to say about this condition
        names = tuple(e for e in names if e == "sim" or _available(e, p))
    tallies = {}
    for e in names:
        try:
            kw = {"frontier_cap": args.frontier_cap, "workers": args.workers} if e == "sim" else {}
            tallies[e] = engines.run_engine(e, p, args.n_max, **kw)
        except engines.EngineUnavailable as exc:
            raise UsageError(str(exc)) from None
    if args.engine != "all":
        rows = list(tallies[names[0]].rows())
        out.write(_emit(args.format, COLUMNS, rows, {"condition": str(p), "engine": names[0]}))
        return EXIT_OK
    ok_all = True
    rows = []
    for j in range(args.n_max):
        level = {e: next(r for r in tallies[e].rows() if r[0] == j + 1) for e in names}
        match = len(set(level.values())) == 1
        ok_all &= match
        for e in names:
            rows.append(level[e] + (e, match))
    out.write(_emit(args.format, COLUMNS + ("engine", "match"), rows,
                    {"condition": str(p), "match": ok_all}))
    return EXIT_OK if ok_all else EXIT_MISMATCH


def _available(engine, p) -> bool:
    try:
        engines.run_engine(engine, p, 1)
    except engines.EngineUnavailable:
        return False
    return True


def cmd_enumerate(args, out) -> int:
    p = _pattern(args)
    if args.n is None or args.n < 1:
        raise UsageError("--n must be given and >= 1")
    chains = [str(c) for c in enumerate_leaves(p, args.n, args.which, args.frontier_cap)]
    if args.format == "json":
        out.write(json.dumps({"condition": str(p), "n": args.n, "which": args.which,
                              "chains": chains}) + "\n")
    else:
        for c in chains:
            out.write(c + "\n")
    return EXIT_OK


def cmd_series(args, out) -> int:
    if args.name not in series.CATALOG:
        raise UsageError(f"unknown series {args.name!r}; known: {', '.join(series.CATALOG)}")
    if args.order < 1:
        raise UsageError("--order must be >= 1")
    s = series.gf(args.name, args.order)
    rows = []
    if args.name in series.BIVARIATE:
        for n in range(args.order + 1):
            poly = s.coeffs[n]
            for d in range(len(poly.c)):
                if poly[d]:
                    rows.append((n, d, _num(poly[d])))
        header = ("n", "d", "coefficient")
    else:
        rows = [(n, _num(s.coeffs[n])) for n in range(args.order + 1)]
        header = ("n", "coefficient")
    out.write(_emit(args.format, header, rows, {"name": args.name, "order": args.order}))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    results = verify.run_checks(args.scope)
    if args.format == "json":
        out.write(json.dumps({"scope": args.scope,
                              "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail}
                                         for r in results]}) + "\n")
    else:
        for r in results:
            out.write(r.line() + "\n")
        failed = sum(not r.ok for r in results)
        out.write(f"{len(results) - failed} passed, {failed} failed\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="woctree",
        description="Count and list leaves of weak-ordering generating trees.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("tsv", "json"), default="tsv")

    def cond(sp):
        sp.add_argument("--condition", required=True,
                        help="alias (tie, lt, le, strict123, weak123, mixed123, kequal:K, "
                             "lt-eq, le-eq) or relations such as '<=,<'")
        sp.add_argument("--frontier-cap", type=int, default=DEFAULT_FRONTIER_CAP)

    sp = sub.add_parser("count", help="per-level leaf counts")
    cond(sp)
    common(sp)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--engine", choices=engines.ENGINES + ("all",), default="formula")
    sp.add_argument("--workers", type=int, default=1, help="processes for the sim engine")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("enumerate", help="list leaves of one level")
    cond(sp)
    common(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--which", choices=ENUMERATION_KINDS, default="active")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("series", help="coefficient table of a generating function")
    common(sp)
    sp.add_argument("name")
    sp.add_argument("--order", type=int, required=True)
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("verify", help="run the cross-engine verification suite")
    common(sp)
    sp.add_argument("--scope", choices=verify.SCOPES, default="quick")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, FrontierLimitError) as exc:
        print(f"woctree: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
