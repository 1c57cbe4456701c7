"""Command-line entry point: ``perconj {matrix,per,seq,triangle,verify,bench}``.

Exit codes: 0 success, 1 verification failure or engine disagreement, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from . import matrices as mx
from . import permanent as pm
from .permstats import PermutationError
from .sequences import SEQUENCES, _boustrophedon_row, kreweras_row, sequence_table
from .serialize import (
    matrix_to_csv, matrix_to_json, table_to_csv, table_to_json, triangle_to_csv, triangle_to_json,
)
from .verify import DEFAULT_MAX_N, SUITES, random_sign_matrix, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def cmd_matrix(args) -> int:
    a = mx.build_family(args.family, args.n)
    sys.stdout.write(matrix_to_json(a) + "\n" if args.format == "json" else matrix_to_csv(a))
    return EXIT_OK


def cmd_per(args) -> int:
    a = mx.build_family(args.family, args.n)
    res = pm.per(a, args.engine)
    if args.format == "json":
        print(json.dumps({
            "family": args.family, "n": args.n, "value": str(res.value),
            "engine": res.engine, "seconds": round(res.elapsed, 6),
        }))
    else:
        print(f"per({args.family}, n={args.n}) = {res.value}  [engine={res.engine}, {res.elapsed:.4f}s]")
    return EXIT_OK


def cmd_seq(args) -> int:
    if args.name == "kreweras":
        return cmd_triangle(args)
    if args.name not in SEQUENCES:
        raise UsageError(f"unknown sequence {args.name!r}; choose from {', '.join([*SEQUENCES, 'kreweras'])}")
    pairs = sequence_table(args.name, args.n)
    sys.stdout.write(table_to_json(pairs) + "\n" if args.format == "json" else table_to_csv(pairs))
    return EXIT_OK


TRIANGLES = {
    "kreweras": lambda m: list(kreweras_row(m).values),
    "boustrophedon": lambda m: list(_boustrophedon_row(m - 1)),
}


def cmd_triangle(args) -> int:
    if args.name not in TRIANGLES:
        raise UsageError(f"unknown triangle {args.name!r}; choose from {', '.join(TRIANGLES)}")
    rows = [TRIANGLES[args.name](m) for m in range(1, args.n + 1)]
    sys.stdout.write(triangle_to_json(rows) + "\n" if args.format == "json" else triangle_to_csv(rows))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}, all")
    report = run_suite(args.suite, args.max_n, args.seed)
    text = report.to_json()
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    s = report.summary
    print(f"{report.suite}: {s['pass']} passed, {s['fail']} failed", file=sys.stderr)
    for c in report.failures():
        print(f"  FAIL {c.id}[{c.param}] lhs={c.lhs} rhs={c.rhs} {c.error or ''}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def run_bench(size: int, trials: int, seed: int) -> dict:
    rng = random.Random(seed)
    engines = [e for e in pm.ENGINES if size <= pm.LIMITS[e]]
    if not engines:
        raise UsageError(f"size {size} exceeds every engine guard")
    if size > 8 and "naive" in engines:
        engines.remove("naive")
    rows = []
    for t in range(trials):
        a = random_sign_matrix(rng, size)
        values, times = {}, {}
        for e in engines:
            t0 = time.perf_counter()
            values[e] = pm.per(a, e).value
            times[e] = time.perf_counter() - t0
        rows.append({
            "trial": t,
            "values": {e: str(v) for e, v in values.items()},
            "seconds": {e: round(s, 6) for e, s in times.items()},
            "agree": len(set(values.values())) == 1,
        })
    return {"size": size, "trials": trials, "seed": seed, "engines": engines, "results": rows,
            "all_agree": all(r["agree"] for r in rows)}


def cmd_bench(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    out = run_bench(args.n, args.trials, args.seed)
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        print("trial," + ",".join(f"{e}_value,{e}_s" for e in out["engines"]) + ",agree")
        for r in out["results"]:
            cells = [f"{r['values'][e]},{r['seconds'][e]}" for e in out["engines"]]
            print(f"{r['trial']}," + ",".join(cells) + f",{r['agree']}")
    return EXIT_OK if out["all_agree"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="perconj", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, default="csv"):
        sp.add_argument("--format", choices=("csv", "json"), default=default)

    sp = sub.add_parser("matrix", help="print a matrix family")
    sp.add_argument("--family", required=True, choices=sorted(mx.FAMILIES))
    sp.add_argument("--n", type=int, required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("per", help="permanent of a matrix family")
    sp.add_argument("--family", required=True, choices=sorted(mx.FAMILIES))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--engine", choices=("naive", "ryser", "dp", "auto"), default="auto")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_per)

    sp = sub.add_parser("seq", help="sequence table")
    sp.add_argument("name")
    sp.add_argument("--n", "--upto", dest="n", type=int, required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_seq)

    sp = sub.add_parser("triangle", help="triangle rows")
    sp.add_argument("name")
    sp.add_argument("--n", "--rows", dest="n", type=int, required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_triangle)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", required=True, help=f"one of {', '.join(SUITES)}, all")
    sp.add_argument("--max-n", type=int, default=None,
                    help="defaults: " + ", ".join(f"{k}={v}" for k, v in DEFAULT_MAX_N.items()))
    sp.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="time the engines on seeded random {-1,0,1} matrices")
    sp.add_argument("--n", type=int, required=True, help="matrix side")
    sp.add_argument("--trials", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    fmt(sp)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, mx.MatrixError, pm.SizeGuardError, PermutationError, ValueError, KeyError) as e:
        print(f"perconj: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"perconj: I/O error: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
