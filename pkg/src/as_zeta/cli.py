"""Command-line interface.

    as-zeta count --family C0 --p 3 --n 1
    as-zeta lpoly --family B --p 3 --k 2
    as-zeta verify-divides --p 3 --k 1 --m 2
    as-zeta table --family C --p 3 --k 2 --n 24 --format csv

Exit codes: 0 pass, 2 verification failure, 3 budget exceeded, 4 bad input,
5 cache corruption.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .cache import CacheCorruption, cache_dir, load, store
from .curves import DEFAULT_BUDGET, BudgetExceeded, CurveSpec, count_points_bruteforce, genus
from .finite_field import FieldError
from .formulas import count_formula, deficit_case
from .quadratic_form import count_points_rank
from .spectrum import weil_spectrum
from .verify import OracleGrid, check_divisibility, oracle_mismatches, reduction_mismatches
from .zeta import base_change, lpoly, reference_note, render

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_BUDGET = 3
EXIT_BAD_INPUT = 4
EXIT_CACHE = 5

FAMILY_FLAGS = {"B0": "B0", "C0": "C0", "B": "Bk", "C": "Ck"}


class BadInput(ValueError):
    pass


def _spec(args, family=None, k=None) -> CurveSpec:
    fam = FAMILY_FLAGS[family or args.family]
    if fam in ("B0", "C0"):
        return CurveSpec(fam, args.p)
    k = args.k if k is None else k
    if k is None:
        raise BadInput(f"--k is required for family {family or args.family}")
    a = args.a if fam == "Ck" else 1
    return CurveSpec(fam, args.p, k, a)


# --- rendering ---


def _rows_out(header: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    if fmt == "json":
        return json.dumps([{h: str(v) for h, v in zip(header, row)} for row in rows], indent=1)
    widths = [max([len(h)] + [len(str(r[i])) for r in rows]) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(str(v).rjust(w) for v, w in zip(row, widths)) for row in rows]
    return "\n".join(lines)


def emit_table(spec: CurveSpec, n_max: int, fmt: str = "csv") -> str:
    """One row per level n: the gcd d, the closed-form case, the deficit and the count."""
    header = ["n", "d", "case", "deficit_u", "deficit_v", "count"]
    rows = []
    for n in range(1, n_max + 1):
        dc = deficit_case(spec, n)
        rows.append([n, dc.d, dc.case, dc.deficit.u, dc.deficit.v, count_formula(spec, n)])
    return _rows_out(header, rows, fmt)


# --- commands ---


def cmd_count(args) -> tuple[int, str]:
    spec = _spec(args)
    if args.n is None or args.n < 1:
        raise BadInput("count needs --n >= 1")
    if args.method == "brute":
        value = count_points_bruteforce(spec, args.n, budget=args.budget, jobs=args.jobs).count
    elif args.method == "rank":
        value = count_points_rank(spec, args.n)
    else:
        value = count_formula(spec, args.n)
    if args.format == "human":
        return EXIT_OK, str(value)
    return EXIT_OK, _rows_out(["family", "p", "k", "a", "n", "method", "count"],
                              [[spec.family, spec.p, spec.k, spec.a, args.n, args.method, value]], args.format)


def cmd_deficits(args) -> tuple[int, str]:
    spec = _spec(args)
    n_max = args.n if args.n is not None else 2 * genus(spec)
    rows = []
    for n in range(1, n_max + 1):
        d = deficit_case(spec, n).deficit
        rows.append([n, d.u, d.v, str(d)])
    return EXIT_OK, _rows_out(["n", "deficit_u", "deficit_v", "deficit"], rows, args.format)


def _lpoly_cached(args, spec: CurveSpec, r: int):
    root = cache_dir(args.cache_dir)
    key = spec.key(r)
    if root is not None:
        hit = load(root, key, spec.p, r)
        if hit is not None:
            return hit
    L = lpoly(spec) if r == 1 else base_change(_lpoly_cached(args, spec, 1), r)
    if root is not None:
        store(root, key, L)
    return L


def cmd_lpoly(args) -> tuple[int, str]:
    spec = _spec(args)
    r = args.m or 1
    L = _lpoly_cached(args, spec, r)
    note = reference_note(spec.key(r), L)
    if note:
        print(note, file=sys.stderr)
    if args.format == "human":
        return EXIT_OK, render(L)
    return EXIT_OK, _rows_out(["key", "p", "r", "g", "lpoly"], [[spec.key(r), L.p, L.r, L.g, render(L)]], args.format)


def cmd_spectrum(args) -> tuple[int, str]:
    sp = weil_spectrum(_spec(args))
    if args.format == "csv":
        return EXIT_OK, _rows_out(["j", "u"], [[j, u] for j, u in enumerate(sp.u)], "csv")
    return EXIT_OK, sp.to_json()


def _verify_pair(args, inner_k: int, outer_k: int, expect: bool) -> tuple[int, str]:
    family = args.family if args.family in ("B", "C") else "C"
    inner, outer = _spec(args, family, inner_k), _spec(args, family, outer_k)
    rep = check_divisibility(inner, outer)
    lines = [f"{rep.headline()}: {'PASS' if rep.divides == expect else 'FAIL'}"]
    if rep.spectral != rep.divides:
        lines.append(f"spectral witness disagrees: multiplicity test says {rep.spectral}")
    if rep.certificate:
        lines.append(f"certificate: {rep.certificate}")
    ok = rep.divides == expect and rep.spectral == rep.divides
    return (EXIT_OK if ok else EXIT_FAIL), "\n".join(lines)


def cmd_verify_divides(args) -> tuple[int, str]:
    if args.k is None or args.m is None:
        raise BadInput("verify-divides needs --k and --m")
    return _verify_pair(args, args.k, args.k * args.m, True)


def cmd_verify_nondivides(args) -> tuple[int, str]:
    if args.k is None or args.l is None:
        raise BadInput("verify-nondivides needs --k and --l")
    if args.l % args.k == 0:
        raise BadInput(f"k={args.k} divides l={args.l}; use verify-divides")
    return _verify_pair(args, args.k, args.l, False)


def cmd_verify_oracle(args) -> tuple[int, str]:
    primes = (args.p,) if args.p else (3, 5, 7)
    ks = (args.k,) if args.k else (1, 2)
    grid = OracleGrid(primes, ks, brute_limit=args.budget if args.budget != DEFAULT_BUDGET else 10**6,
                      rank_n_max=args.n or 40, jobs=args.jobs)
    for bad in oracle_mismatches(grid):
        return EXIT_FAIL, f"FAIL {bad}"
    for bad in reduction_mismatches(primes, ks):
        return EXIT_FAIL, f"FAIL {bad}"
    return EXIT_OK, f"PASS: brute force, rank method and closed forms agree for p in {primes}, k in {ks}"


def cmd_table(args) -> tuple[int, str]:
    spec = _spec(args)
    return EXIT_OK, emit_table(spec, args.n or 0, args.format)


COMMANDS = {
    "count": cmd_count,
    "deficits": cmd_deficits,
    "lpoly": cmd_lpoly,
    "spectrum": cmd_spectrum,
    "verify-divides": cmd_verify_divides,
    "verify-nondivides": cmd_verify_nondivides,
    "verify-oracle": cmd_verify_oracle,
    "table": cmd_table,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=sorted(FAMILY_FLAGS), default=None)
    common.add_argument("--p", type=int, default=None)
    common.add_argument("--k", type=int, default=None)
    common.add_argument("--a", type=int, default=1)
    common.add_argument("--n", type=int, default=None)
    common.add_argument("--m", type=int, default=None)
    common.add_argument("--l", type=int, default=None, help="outer index for verify-nondivides")
    common.add_argument("--format", choices=("human", "json", "csv"), default="human")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--method", choices=("formula", "rank", "brute"), default="formula")
    parser = argparse.ArgumentParser(prog="as-zeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def _check_args(args):
    needs_family = args.command in ("count", "deficits", "lpoly", "spectrum", "table")
    if needs_family and args.family is None:
        raise BadInput(f"{args.command} needs --family")
    if args.command != "verify-oracle" and args.p is None:
        raise BadInput("--p is required")
    if args.jobs < 1:
        raise BadInput("--jobs must be >= 1")


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code else EXIT_OK
    try:
        _check_args(args)
        code, text = COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CacheCorruption as exc:
        print(f"cache corruption: {exc}", file=sys.stderr)
        return EXIT_CACHE
    except (BadInput, FieldError, ValueError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    if text:
        print(text, file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
