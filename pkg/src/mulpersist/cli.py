"""Command-line front end for the solver, proofs, scans and censuses.

Exit codes: 0 success / proved, 1 verified mathematical mismatch, 2 usage
error, 3 guard or resource error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .catalog import catalog_by_id, equation_catalog
from .constants import ConstantError, verify_constants
from .even import complexity_table, lemma_two_adic_bound
from .genealogy import verify_builtin_edges
from .oracle import scan_persistence
from .rhs_index import main_index
from .solver import solve_equation, prove_odd_target

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


class UsageError(Exception):
    pass


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("PERSIST_THREADS", "1")))
    except ValueError:
        return 1


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _solve_many(eqs, threads: int):
    if threads <= 1:
        return [solve_equation(eq) for eq in eqs]
    main_index()        # build once before sharing across workers
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(solve_equation, eqs))


def cmd_solve(args) -> int:
    by_id = catalog_by_id()
    if args.eq is not None:
        if args.eq not in by_id:
            raise UsageError(f"unknown equation id {args.eq!r}")
        eqs = [by_id[args.eq]]
    elif args.target is not None:
        if args.target not in (1, 3, 5, 7, 9):
            raise UsageError("--target must be an odd digit")
        eqs = [eq for eq in equation_catalog() if eq.target_d == args.target]
    else:
        raise UsageError("solve needs --eq or --target")

    sets = _solve_many(eqs, args.threads)
    if args.format == "json":
        _emit(args, json.dumps(
            {"sets": [json.loads(s.to_json()) for s in sets]},
            sort_keys=True) + "\n")
    else:
        _emit(args, "".join(s.to_text() for s in sets))
    return EXIT_OK if all(not s.unresolved for s in sets) else EXIT_MISMATCH


def cmd_prove(args) -> int:
    targets = [args.target] if args.target is not None else [1, 3, 5, 7, 9]
    for d in targets:
        if d not in (1, 3, 5, 7, 9):
            raise UsageError("prove supports odd targets only")
    reports = [prove_odd_target(d) for d in targets]
    if args.format == "json":
        _emit(args, json.dumps(
            {"reports": [json.loads(r.to_json()) for r in reports]},
            sort_keys=True) + "\n")
    else:
        _emit(args, "".join(r.to_text() for r in reports))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_MISMATCH


def cmd_scan(args) -> int:
    report = scan_persistence(args.limit)
    if args.format == "json":
        _emit(args, report.to_json() + "\n")
    else:
        _emit(args, f"scanned [0, {report.limit}): max height "
                    f"{report.max_height} at {report.witness}, "
                    f"{len(report.violations)} violations\n"
              + report.histogram_csv())
    return EXIT_OK if not report.violations else EXIT_MISMATCH


def cmd_even_stats(args) -> int:
    rows = complexity_table()
    if args.format == "json":
        _emit(args, json.dumps([r.to_dict() for r in rows],
                               sort_keys=True) + "\n")
    else:
        lines = ["target,vertices,equations,max_terms,max_terms_vertex"]
        lines += [f"{r.target},{r.vertices},{r.equations},{r.max_terms},"
                  f"{r.max_terms_vertex}" for r in rows]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_two_bound(args) -> int:
    try:
        multiset = tuple(int(x) for x in args.multiset.split(","))
    except ValueError as exc:
        raise UsageError(f"bad multiset {args.multiset!r}") from exc
    report = lemma_two_adic_bound(multiset, e_max=args.bound)
    if args.format == "json":
        _emit(args, json.dumps(report.to_dict(), sort_keys=True) + "\n")
    else:
        _emit(args, f"multiset {list(report.multiset)}: largest power of"
                    f" two is 2^{report.bound}, witness"
                    f" {report.witness}\n")
    return EXIT_OK


def cmd_selftest(args) -> int:
    import random

    lines = []
    try:
        checks = verify_constants()
        lines.append(f"constants: {len(checks)} checks ok")
    except ConstantError as exc:
        _emit(args, f"constants: FAILED ({exc})\n")
        return EXIT_MISMATCH
    for d in (1, 3, 5, 7, 9, 2, 4):
        if not verify_builtin_edges(d):
            _emit(args, f"graph {d}: edge verification FAILED\n")
            return EXIT_MISMATCH
    lines.append("graphs: all stored edges verified")
    lines.append(f"catalog: {len(equation_catalog())} equations generated")

    idx = main_index()
    rng = random.Random(args.seed)
    from .constants import M12
    for _ in range(100):
        u = rng.randrange(idx.u_range)
        w = rng.randrange(idx.w_range)
        if idx.lookup(pow(3, u, M12) * pow(7, w, M12) % M12) != [(u, w)]:
            _emit(args, f"index: lookup mismatch at {(u, w)}\n")
            return EXIT_MISMATCH
    lines.append("index: 100 sampled lookups ok")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mulpersist",
        description="solve digit-product antecedent equations and verify "
                    "the odd-target height bounds")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--out", metavar="PATH", default=None)
        p.add_argument("--threads", type=int, default=_default_threads())
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("solve", help="solve one equation or a whole target")
    p.add_argument("--eq", default=None, metavar="ID")
    p.add_argument("--target", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("prove", help="verify graph closure for odd targets")
    p.add_argument("--target", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("scan", help="exhaustive height scan")
    p.add_argument("--limit", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("even-stats", help="even-target census table")
    common(p)
    p.set_defaults(func=cmd_even_stats)

    p = sub.add_parser("two-bound",
                       help="power-of-two bound for a digit multiset")
    p.add_argument("--multiset", required=True, metavar="D,D,...")
    p.add_argument("--bound", type=int, default=64,
                   help="give up beyond 2^BOUND")
    common(p)
    p.set_defaults(func=cmd_two_bound)

    p = sub.add_parser("selftest", help="re-verify embedded constants")
    common(p)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, RuntimeError) as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
