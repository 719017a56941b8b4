"""Command-line interface: ``gammadesk {stats,gamma,recurrence,verify,series}``.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage or config
error, 3 corrupt table file.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from . import __version__, kernels
from .config import PROFILE_ENV, PROFILES, RunConfig
from .perm import ClassSpec, EnumerationLimitError, Permutation, joint_distribution, stats
from .poly import gamma_contract, gamma_expand
from .recurrences import IntegrityError, build_table, chain_range, iter_rows, reconstruct_poly, sweep
from .series import SolverError, check_rational_relations, series_equal, solve_s1_cubic, solve_s1_system, solve_s2_system
from .store import CorruptTableError, TableWriter, load_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CORRUPT = 0, 1, 2, 3

log = logging.getLogger("gammadesk")


class UsageError(Exception):
    pass


def _parse_word(tokens: list[str]) -> Permutation:
    text = " ".join(tokens)
    try:
        return Permutation.parse(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_stats(args) -> int:
    pi = _parse_word(args.word)
    sv = stats(pi)
    d = sv.as_dict()
    des_set = "{" + ",".join(map(str, sorted(d.pop("des_set")))) + "}"
    print(f"pi={pi} DES={des_set} " + " ".join(f"{k}={v}" for k, v in d.items()))
    return EXIT_OK


def cmd_gamma(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    fam = args.family
    if args.avoid and fam != "A":
        raise UsageError("--avoid only applies to --family A")
    if fam == "I":
        t = build_table("a", args.n)
        poly, g = reconstruct_poly(t, args.n), t.gamma_vector(args.n)
        label = f"I_{args.n}(t)"
    elif fam == "J":
        t = build_table("b", args.n)
        poly, g = reconstruct_poly(t, args.n), t.gamma_vector(args.n)
        label = f"J_{2 * args.n}(t)"
    else:
        c = ClassSpec.avoiding(*args.avoid) if args.avoid else ClassSpec.all()
        poly = joint_distribution(args.n, c, ["des"])
        g = gamma_expand(poly, center2=args.n - 1)
        if gamma_contract(g) != poly:
            print("descent polynomial is not gamma-expandable", file=sys.stderr)
            return EXIT_FAIL
        label = f"A_{args.n}(t) over {c}"
    ok = g.is_nonnegative()
    print(f"{label} = {poly}")
    print(f"gamma = {g}")
    print(f"gamma-nonnegative: {'yes' if ok else 'no'}")
    return EXIT_OK if ok else EXIT_FAIL


def _summarise_sweep(rep) -> list[str]:
    fam = rep.family
    ch = rep.chains
    lines = [f"family {fam}: rows 1..{rep.max_n}"]
    if rep.nonneg.negatives:
        neg = ", ".join(f"({m},{k})={v}" for (m, k), v in sorted(rep.nonneg.negatives.items()))
        expected = "" if rep.unexpected_negatives else " (all expected)"
        lines.append(f"negative entries{expected}: {neg}")
    else:
        lines.append("negative entries: none")
    lines.append(f"aux inequalities: {rep.aux.checked} checked, {len(rep.aux.violations)} violated")
    if ch.rows:
        lines.append(f"proof chains: rows {min(ch.rows)}..{max(ch.rows)}, "
                     f"in-hypothesis rows {len(ch.in_hypothesis_rows)} (from {ch.hypothesis_from})")
    else:
        lines.append("proof chains: no rows in range")
    for name, (slack, n) in sorted(ch.min_slack.items()):
        lines.append(f"  {name}: min slack sign {'+' if slack >= 0 else '-'} at n={n}, "
                     f"nonnegative from n={ch.first_nonneg_from(name)}")
    for name, n, v in ch.identity_failures:
        lines.append(f"  identity {name} fails at n={n}")
    for name, n, v in ch.failures:
        lines.append(f"  FAIL {name} at in-hypothesis row n={n}")
    lines.append("verdict: " + ("pass" if rep.ok else "FAIL"))
    return lines


def cmd_recurrence(args) -> int:
    fam = args.family
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    start = None
    if args.resume:
        lfam, start = load_table(args.resume, fam)
        if start and max(start) > args.max_n:
            start = {n: r for n, r in start.items() if n <= args.max_n}
        log.info("resuming %s from %d stored rows", lfam, len(start))
    t0 = time.perf_counter()
    rows = iter_rows(fam, args.max_n, start=start)
    if args.out:
        with TableWriter(args.out, fam) as w:
            rep = sweep(fam, args.max_n, rows=rows, on_row=w.write_row)
    else:
        rep = sweep(fam, args.max_n, rows=rows)
    for line in _summarise_sweep(rep):
        print(line)
    if not list(chain_range(fam, args.max_n)):
        print("note: table too short for any proof-chain row")
    log.info("done in %.2fs", time.perf_counter() - t0)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    from .suite import render_text, run_suite, suite_document

    try:
        cfg = RunConfig.from_profile(args.profile, max_n_table=args.max_n_table, max_n_enum=args.max_n_enum,
                                     series_order=args.series_order, out_dir=args.out_dir)
    except ValueError as e:
        raise UsageError(str(e)) from None
    workers = args.workers if args.workers is not None else (os.cpu_count() or 1)
    if workers < 1:
        raise UsageError("--workers must be >= 1")
    reports = run_suite(cfg, only=args.only, workers=workers)
    if not reports:
        raise UsageError(f"no check matches --only {args.only}")
    os.makedirs(cfg.out_dir, exist_ok=True)
    doc = suite_document(cfg, reports)
    with open(os.path.join(cfg.out_dir, "report.json"), "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
    text = render_text(cfg, reports)
    with open(os.path.join(cfg.out_dir, "report.txt"), "w", encoding="utf-8") as fh:
        fh.write(text)
    print(text, end="")
    return EXIT_FAIL if any(r.verdict == "fail" for r in reports) else EXIT_OK


def _print_series(name: str, ser) -> None:
    for m in range(ser.order + 1):
        if ser.coeffs[m]:
            print(f"{name} [z^{m}] = {ser.coeff(m)}")


def cmd_series(args) -> int:
    N = args.order
    if N < 1:
        raise UsageError("--order must be >= 1")
    ok = True
    if args.system == "s1":
        sol = solve_s1_system(N)
        for nm in ("S1", "F1", "R1"):
            _print_series(nm, sol.series[nm])
        rel = check_rational_relations(*(sol.series[k] for k in ("S1", "F1", "R1")))
        for nm, r in rel.items():
            print(f"rational relation {nm}: residual {'zero' if r.is_zero() else 'NONZERO'}")
            ok &= r.is_zero()
    elif args.system == "s2":
        sol = solve_s2_system(N)
        for nm in ("S2", "T2"):
            _print_series(nm, sol.series[nm])
    elif args.system == "cubic":
        sol = solve_s1_cubic(N)
        _print_series("S1", sol.series["S1"])
    else:
        s1, s2, cub = solve_s1_system(N), solve_s2_system(N), solve_s1_cubic(N)
        for other_name, other in (("S2", s2.series["S2"]), ("cubic", cub.series["S1"])):
            d = series_equal(s1.series["S1"], other)
            if d:
                print(f"S1 == {other_name} through z^{N}")
            else:
                print(f"S1 != {other_name}: first difference at z^{d.z_order}, monomial {d.monomial}")
                ok = False
        rel = check_rational_relations(*(s1.series[k] for k in ("S1", "F1", "R1")))
        for nm, r in rel.items():
            print(f"rational relation {nm}: residual {'zero' if r.is_zero() else 'NONZERO'}")
            ok &= r.is_zero()
        sol = s1
    print(f"fixed-point residuals: {'zero' if sol.residuals_zero else 'NONZERO'}")
    ok &= sol.residuals_zero
    print("verdict: " + ("pass" if ok else "FAIL"))
    return EXIT_OK if ok else EXIT_FAIL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gammadesk", description="Exact descent statistics and gamma-positivity checks.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__} (kernels: {kernels.BACKEND})")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("stats", help="all descent statistics of one permutation")
    s.add_argument("word", nargs="+", help="one-line notation, e.g. 321 or 3 2 1")
    s.set_defaults(func=cmd_stats)

    g = sub.add_parser("gamma", help="descent polynomial and gamma vector")
    g.add_argument("--family", choices=["I", "J", "A"], required=True,
                   help="I: involutions I_n; J: fixed-point-free involutions J_2n; A: S_n or an avoidance class")
    g.add_argument("--n", type=int, required=True, help="n (half-length for J)")
    g.add_argument("--avoid", nargs="+", metavar="PATTERN", help="patterns to avoid (family A)")
    g.set_defaults(func=cmd_gamma)

    r = sub.add_parser("recurrence", help="build a gamma-coefficient table and sweep its checks")
    r.add_argument("--family", choices=["a", "b"], required=True)
    r.add_argument("--max-n", type=int, required=True)
    r.add_argument("--out", help="write the table as JSON Lines")
    r.add_argument("--resume", help="continue from a saved table")
    r.set_defaults(func=cmd_recurrence)

    v = sub.add_parser("verify", help="run the check suite")
    v.add_argument("--profile", choices=sorted(PROFILES) + ["custom"], default=None,
                   help=f"default from ${PROFILE_ENV}, else fast")
    v.add_argument("--only", nargs="+", metavar="CHECK", help="run only these check ids (prefix match)")
    v.add_argument("--out-dir", default="gammadesk-out")
    v.add_argument("--workers", type=int, default=None, help="process pool size (default: CPU count)")
    v.add_argument("--max-n-table", type=int)
    v.add_argument("--max-n-enum", type=int)
    v.add_argument("--series-order", type=int)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("series", help="solve the functional equations as truncated series")
    e.add_argument("--system", choices=["s1", "s2", "cubic", "cross-check"], default="cross-check")
    e.add_argument("--order", type=int, default=10)
    e.set_defaults(func=cmd_series)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except UsageError as e:
        print(f"gammadesk: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationLimitError as e:
        print(f"gammadesk: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CorruptTableError as e:
        print(f"gammadesk: corrupt table: {e}", file=sys.stderr)
        return EXIT_CORRUPT
    except FileNotFoundError as e:
        print(f"gammadesk: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (IntegrityError, SolverError) as e:
        print(f"gammadesk: check failed: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
