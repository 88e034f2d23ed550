"""Command-line surface.

Commands: char | table | decompose | expect | distribution | simulate |
verify. Exact rationals are printed as "p/q" strings (JSON included) so
output is byte-stable across platforms; floats are a convenience column.
Exit codes: 0 ok, 1 verification or z-score failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .characters import build_table, character
from .errors import Error
from .meanstats import decompose
from .oracles import monte_carlo
from .partitions import Partition, enumerate_partitions
from .perms import StatisticId
from .verify import run_all
from .walks import (
    GeneratorSet,
    distribution_to_json,
    expectation,
    walk_distribution,
)


def _csv_rows(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf).writerows(rows)
    return buf.getvalue().rstrip("\n")


def _format(args) -> str:
    return getattr(args, "format_sub", None) or args.format or "plain"


def _parse_stat(args) -> StatisticId:
    return StatisticId.parse(args.stat, getattr(args, "k", None))


def _cmd_char(args, out) -> int:
    lam = Partition.from_text(args.lam)
    mu = Partition.from_text(args.mu)
    if lam.n != args.n or mu.n != args.n:
        raise Error(f"--lambda and --mu must both be partitions of {args.n}")
    value = character(lam, mu)
    if _format(args) == "json":
        print(
            json.dumps(
                {"n": args.n, "lambda": str(lam), "mu": str(mu), "value": value}
            ),
            file=out,
        )
    elif _format(args) == "csv":
        print(_csv_rows([["lambda", "mu", "value"], [str(lam), str(mu), value]]), file=out)
    else:
        print(value, file=out)
    return 0


def _cmd_table(args, out) -> int:
    table = build_table(args.n)
    if _format(args) == "json":
        print(table.to_json(), file=out)
    elif _format(args) == "csv":
        print(table.to_csv().rstrip("\n"), file=out)
    else:
        width = max(len(str(lam)) for lam in table.order) + 2
        header = "".join(str(mu).rjust(width) for mu in table.order)
        print(" " * width + header, file=out)
        for lam in table.order:
            cells = "".join(
                str(table.rows[lam][mu]).rjust(width) for mu in table.order
            )
            print(str(lam).rjust(width) + cells, file=out)
    return 0


def _cmd_decompose(args, out) -> int:
    stat = _parse_stat(args)
    decomp = decompose(stat, args.n)
    ordered = sorted(decomp.coeffs, key=lambda lam: [-part for part in lam])
    if _format(args) == "json":
        print(decomp.to_json(), file=out)
    elif _format(args) == "csv":
        rows = [["lambda", "coefficient"]]
        rows += [[str(lam), str(decomp.coeffs[lam])] for lam in ordered]
        print(_csv_rows(rows), file=out)
    else:
        for lam in ordered:
            coeff = decomp.coeffs[lam]
            print(f"{str(lam):>12}  {str(coeff):>10}  {float(coeff):.6g}", file=out)
    return 0


def _cmd_expect(args, out) -> int:
    gamma = GeneratorSet.from_text(args.n, args.gamma)
    result = expectation(gamma, _parse_stat(args), args.t)
    if _format(args) == "json":
        print(result.to_json(), file=out)
    elif _format(args) == "csv":
        rows = [
            ["n", "gamma", "stat", "t", "exact", "float"],
            [result.n, gamma.text, str(result.stat), result.t, str(result.exact), result.as_float],
        ]
        print(_csv_rows(rows), file=out)
    else:
        print(f"{result.exact}  {result.as_float:.10g}", file=out)
    return 0


def _cmd_distribution(args, out) -> int:
    gamma = GeneratorSet.from_text(args.n, args.gamma)
    dist = walk_distribution(gamma, args.t)
    order = enumerate_partitions(args.n)
    if _format(args) == "json":
        print(distribution_to_json(gamma, args.t, dist), file=out)
    elif _format(args) == "csv":
        rows = [["class", "probability"]]
        rows += [[str(nu), str(dist[nu])] for nu in order]
        print(_csv_rows(rows), file=out)
    else:
        for nu in order:
            print(f"{str(nu):>14}  {str(dist[nu]):>14}  {float(dist[nu]):.10g}", file=out)
    return 0


def _cmd_simulate(args, out) -> int:
    gamma = GeneratorSet.from_text(args.n, args.gamma)
    report = monte_carlo(
        gamma, _parse_stat(args), args.t, args.trials, args.seed, args.stream
    )
    if _format(args) == "json":
        print(report.to_json(), file=out)
    elif _format(args) == "csv":
        rows = [
            ["trials", "seed", "mean", "stddev", "reference", "z"],
            [
                report.trials,
                report.seed,
                report.sample_mean,
                report.sample_stddev,
                str(report.reference_exact),
                report.z_score,
            ],
        ]
        print(_csv_rows(rows), file=out)
    else:
        print(
            f"mean {report.sample_mean:.6g}  stddev {report.sample_stddev:.6g}  "
            f"reference {report.reference_exact}  z {report.z_score:+.4f}",
            file=out,
        )
    return 0 if abs(report.z_score) < args.zmax else 1


def _cmd_verify(args, out) -> int:
    results = run_all(nmax=args.nmax)
    ok = True
    for res in results:
        ok = ok and res.passed
        status = "PASS" if res.passed else "FAIL"
        if not args.quiet or not res.passed:
            line = f"{res.name:<22} {status}  ({res.seconds:.2f}s)"
            if res.detail and not res.passed:
                line += f"  {res.detail}"
            print(line, file=out)
    if not args.quiet:
        print("all checks passed" if ok else "FAILED", file=out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snwalk",
        description=(
            "Exact expected permutation statistics on products of uniform "
            "elements of conjugacy-class unions, plus oracles to verify them."
        ),
    )
    parser.add_argument("--quiet", action="store_true", help="suppress chatter")
    parser.add_argument(
        "--format",
        choices=("plain", "json", "csv"),
        default=None,
        help="output format (may also be given after the subcommand)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        # separate dest: a subparser default must not clobber the global flag
        p.add_argument(
            "--format",
            dest="format_sub",
            choices=("plain", "json", "csv"),
            default=None,
        )

    p = sub.add_parser("char", help="one irreducible character value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="LAMBDA")
    p.add_argument("--mu", required=True)
    add_format(p)

    p = sub.add_parser("table", help="full character table")
    p.add_argument("--n", type=int, required=True)
    add_format(p)

    p = sub.add_parser("decompose", help="character coefficients of a mean statistic")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stat", required=True, help="exc|wexc|des|maj|inv|cyc[_k]")
    p.add_argument("--k", type=int, help="cycle length when --stat is cyc")
    add_format(p)

    p = sub.add_parser("expect", help="exact expectation after t steps")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", required=True, help="transpositions|ncycles|one-fixed-point|types like '2,2,1;4,1'")
    p.add_argument("--stat", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int, required=True)
    add_format(p)

    p = sub.add_parser("distribution", help="exact class distribution after t steps")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--t", type=int, required=True)
    add_format(p)

    p = sub.add_parser("simulate", help="seeded Monte Carlo check against the engine")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--stat", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--stream", type=int, default=0)
    p.add_argument("--zmax", type=float, default=5.0)
    add_format(p)

    p = sub.add_parser("verify", help="run the exact verification battery")
    p.add_argument("--nmax", type=int, default=6)

    return parser


_COMMANDS = {
    "char": _cmd_char,
    "table": _cmd_table,
    "decompose": _cmd_decompose,
    "expect": _cmd_expect,
    "distribution": _cmd_distribution,
    "simulate": _cmd_simulate,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, sys.stdout)
    except Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
