"""Command-line driver: generators, solver, bound tables and verification.

One binary, six subcommands (gen, solve, bounds, compare, exact, verify).
Every command is deterministic given its flags; repeated runs produce
byte-identical files.  Exit codes: 0 success, 1 I/O or runtime failure,
2 usage error, 3 verification or bound violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .bounds import (
    bound_series,
    classical_bound,
    cover_size_bound,
    fmt_float,
    improved_bound,
    series_csv,
)
from .generate import BERNOULLI_REPAIR, MODELS, GenSpec, SplitMix64, generate_instance
from .greedy import complete_cover, run_greedy, trace_document
from .instance import Instance, InstanceError, density, parse_instance, write_instance
from .oracle import (
    TooLarge,
    check_bound_exhaustive,
    check_bound_random,
    check_product_sandwich,
    default_random_suite,
    exact_min_cover,
)

DOMINANCE_SLACK = 1e-9

COMPARE_HEADER = (
    "instance_id,m,n,gamma_nominal,gamma_effective,seed,model,"
    "k,u_k,delta_k,classical,improved,ratio"
)


@dataclass(frozen=True)
class ExperimentRecord:
    """One CSV row of a sweep: the trace value u_k next to both bounds."""

    instance_id: int
    m: int
    n: int
    gamma_nominal: float
    gamma_effective: float
    seed: str
    model: str
    k: int
    u_k: int
    delta_k: float
    classical: float
    improved: float
    ratio: float

    def csv_row(self) -> str:
        return ",".join(
            [
                str(self.instance_id),
                str(self.m),
                str(self.n),
                fmt_float(self.gamma_nominal),
                fmt_float(self.gamma_effective),
                self.seed,
                self.model,
                str(self.k),
                str(self.u_k),
                fmt_float(self.delta_k),
                fmt_float(self.classical),
                fmt_float(self.improved),
                fmt_float(self.ratio),
            ]
        )


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8", newline="") as f:
        return f.read()


def _check_gamma_flag(parser: argparse.ArgumentParser, gamma: float) -> None:
    if not 0.0 < gamma <= 1.0:
        parser.error(f"--gamma must be in (0, 1], got {gamma}")


def _check_gen_flags(parser: argparse.ArgumentParser, args) -> None:
    if args.m < 1:
        parser.error(f"--m must be >= 1, got {args.m}")
    if args.n < 1:
        parser.error(f"--n must be >= 1, got {args.n}")
    _check_gamma_flag(parser, args.gamma)
    if not 0 <= args.seed < 1 << 64:
        parser.error(f"--seed must be an unsigned 64-bit integer, got {args.seed}")
    if args.model == BERNOULLI_REPAIR:
        if args.p is None:
            parser.error("--p is required for the bernoulli-repair model")
        if not 0.0 <= args.p <= 1.0:
            parser.error(f"--p must be in [0, 1], got {args.p}")
    elif args.p is not None:
        parser.error("--p only applies to the bernoulli-repair model")


def _add_gen_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, required=True, help="number of rows (subsets)")
    p.add_argument("--n", type=int, required=True, help="number of columns (elements)")
    p.add_argument("--gamma", type=float, required=True,
                   help="minimum column density target in (0, 1]")
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("--p", type=float, default=None,
                   help="cell probability (bernoulli-repair only)")
    p.add_argument("--seed", type=int, required=True)


def cmd_gen(parser, args) -> int:
    _check_gen_flags(parser, args)
    spec = GenSpec(m=args.m, n=args.n, gamma=args.gamma, model=args.model,
                   seed=args.seed, p=args.p)
    try:
        inst = generate_instance(spec)
        _write_text(args.out, write_instance(inst))
    except (ValueError, OSError) as e:
        print(f"gen: {e}", file=sys.stderr)
        return 1
    d = density(inst)
    print(
        f"m={inst.m} n={inst.n} model={spec.model} seed={spec.seed} "
        f"c_effective={d.c_effective} gamma_effective={fmt_float(d.gamma_effective)}"
    )
    return 0


def _load_instance(path: str) -> Instance:
    return parse_instance(_read_text(path))


def cmd_solve(parser, args) -> int:
    if args.k_max is not None and args.k_max < 0:
        parser.error(f"--k-max must be >= 0, got {args.k_max}")
    try:
        inst = _load_instance(args.in_path)
    except (OSError, InstanceError) as e:
        print(f"solve: {e}", file=sys.stderr)
        return 1
    if args.k_star is not None:
        g = density(inst).gamma_effective
        k_star, _ = cover_size_bound(g, inst.m, inst.n, args.k_star)
        trace = run_greedy(inst, k_max=k_star)
    else:
        trace = run_greedy(inst, k_max=args.k_max)
    if args.patch:
        trace = complete_cover(inst, trace)
    doc = trace_document(inst, trace)
    try:
        _write_text(args.out, json.dumps(doc, indent=2) + "\n")
    except OSError as e:
        print(f"solve: {e}", file=sys.stderr)
        return 1
    print(
        f"greedy={len(trace.greedy_rows)} patch={len(trace.patch_rows)} "
        f"total_size={trace.total_size}"
    )
    return 0


def cmd_bounds(parser, args) -> int:
    _check_gamma_flag(parser, args.gamma)
    if args.m < 1:
        parser.error(f"--m must be >= 1, got {args.m}")
    k_max = args.k_max if args.k_max is not None else args.m
    if not 0 <= k_max <= args.m:
        parser.error(f"--k-max must be in [0, m], got {k_max}")
    if args.n is not None and args.n < 0:
        parser.error(f"--n must be >= 0, got {args.n}")
    out = series_csv(bound_series(args.gamma, args.m, k_max))
    if args.n is not None:
        ki, si = cover_size_bound(args.gamma, args.m, args.n, "improved")
        kc, sc = cover_size_bound(args.gamma, args.m, args.n, "classical")
        out += f"# cover_size_bound improved=({ki},{si}) classical=({kc},{sc})\n"
    sys.stdout.write(out)
    return 0


def _trace_records(inst: Instance, instance_id: int, gamma_nominal: float,
                   seed: str, model: str) -> list[ExperimentRecord]:
    g = density(inst).gamma_effective
    trace = run_greedy(inst)
    records = []
    for k, u in enumerate(trace.uncovered_counts):
        c = classical_bound(g, k)
        b = improved_bound(g, inst.m, k)
        ratio = b / c if c > 0.0 else 1.0
        records.append(
            ExperimentRecord(
                instance_id, inst.m, inst.n, gamma_nominal, g, seed, model,
                k, u, u / inst.n, c, b, ratio,
            )
        )
    return records


def cmd_compare(parser, args) -> int:
    if args.in_path is not None:
        if args.count is not None:
            parser.error("--in and --count are mutually exclusive")
        try:
            inst = _load_instance(args.in_path)
        except (OSError, InstanceError) as e:
            print(f"compare: {e}", file=sys.stderr)
            return 1
        g = density(inst).gamma_effective
        records = _trace_records(inst, 0, g, "", "file")
    else:
        for flag, val in (("--m", args.m), ("--n", args.n), ("--gamma", args.gamma),
                          ("--model", args.model), ("--seed", args.seed)):
            if val is None:
                parser.error(f"{flag} is required for a sweep (or pass --in)")
        _check_gen_flags(parser, args)
        count = args.count if args.count is not None else 1
        if count < 1:
            parser.error(f"--count must be >= 1, got {count}")
        stream = SplitMix64(args.seed)
        records = []
        for i in range(count):
            sub_seed = stream.next_u64()
            spec = GenSpec(m=args.m, n=args.n, gamma=args.gamma, model=args.model,
                           seed=sub_seed, p=args.p)
            inst = generate_instance(spec)
            records.extend(
                _trace_records(inst, i, args.gamma, str(sub_seed), args.model)
            )

    violations = 0
    for r in records:
        if r.delta_k > r.improved + DOMINANCE_SLACK or r.improved > r.classical + DOMINANCE_SLACK:
            violations += 1
            print(
                f"compare: dominance violated at instance {r.instance_id} k={r.k}: "
                f"delta={r.delta_k!r} improved={r.improved!r} classical={r.classical!r}",
                file=sys.stderr,
            )

    csv = COMPARE_HEADER + "\n" + "".join(r.csv_row() + "\n" for r in records)
    try:
        if args.out is not None:
            _write_text(args.out, csv)
        else:
            sys.stdout.write(csv)
    except OSError as e:
        print(f"compare: {e}", file=sys.stderr)
        return 1
    return 3 if violations else 0


def cmd_exact(parser, args) -> int:
    try:
        inst = _load_instance(args.in_path)
    except (OSError, InstanceError) as e:
        print(f"exact: {e}", file=sys.stderr)
        return 1
    try:
        size, rows = exact_min_cover(inst)
    except TooLarge as e:
        print(f"exact: {e}", file=sys.stderr)
        return 2
    print(f"size: {size}")
    print("rows: " + " ".join(str(i) for i in sorted(rows)))
    return 0


def cmd_verify(parser, args) -> int:
    if args.suite == "product-inequality":
        if args.max_y < 1:
            parser.error(f"--max-y must be >= 1, got {args.max_y}")
        report = check_product_sandwich(args.max_y)
        label = f"product-inequality max-y={args.max_y}"
        pairs = args.max_y * (args.max_y + 1) // 2
        line = f"{label}: checked {pairs} pairs, " \
               f"{len(report.violations)} violations: " \
               f"{'PASS' if report.passed else 'FAIL'}"
    elif args.suite == "exhaustive":
        if args.m is None or args.n is None:
            parser.error("--m and --n are required for the exhaustive suite")
        try:
            report = check_bound_exhaustive(args.m, args.n)
        except TooLarge as e:
            print(f"verify: {e}", file=sys.stderr)
            return 2
        line = f"exhaustive m={args.m} n={args.n}: {report.summary()}"
    else:
        if args.count < 1:
            parser.error(f"--count must be >= 1, got {args.count}")
        report = check_bound_random(default_random_suite(args.count, args.seed))
        line = f"random count={args.count} seed={args.seed}: {report.summary()}"

    if args.json is not None:
        try:
            _write_text(args.json, json.dumps(report.to_dict(), indent=2) + "\n")
        except OSError as e:
            print(f"verify: {e}", file=sys.stderr)
            return 1
    print(line)
    return 0 if report.passed else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greedycover",
        description="Greedy set cover with coverage-trajectory bound validation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance file")
    _add_gen_flags(p)
    p.add_argument("--out", required=True, help="instance file to write")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="run the two-phase solver on an instance")
    p.add_argument("--in", dest="in_path", required=True, help="instance file")
    stop = p.add_mutually_exclusive_group()
    stop.add_argument("--k-max", type=int, default=None,
                      help="stop greedy after at most this many steps")
    stop.add_argument("--k-star", choices=("classical", "improved"), default=None,
                      help="stop greedy at the bound-recommended step")
    p.add_argument("--patch", action="store_true",
                   help="complete the cover after greedy stops")
    p.add_argument("--out", required=True, help="trace JSON file to write")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bounds", help="tabulate both bounds as CSV")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--n", type=int, default=None,
                   help="also print the cover-size bound trailer for n elements")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("compare", help="tabulate empirical delta_k against both bounds")
    p.add_argument("--in", dest="in_path", default=None, help="single instance file")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--model", choices=MODELS, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--count", type=int, default=None, help="sweep size")
    p.add_argument("--out", default=None, help="CSV file (default stdout)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("exact", help="exact minimum cover by exhaustive search")
    p.add_argument("--in", dest="in_path", required=True, help="instance file")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", help="run a validation suite")
    p.add_argument("--suite", choices=("product-inequality", "exhaustive", "random"),
                   required=True)
    p.add_argument("--max-y", type=int, default=200,
                   help="product-inequality: largest y")
    p.add_argument("--m", type=int, default=None, help="exhaustive: rows")
    p.add_argument("--n", type=int, default=None, help="exhaustive: columns")
    p.add_argument("--count", type=int, default=1000, help="random: instances")
    p.add_argument("--seed", type=int, default=0, help="random: schedule seed")
    p.add_argument("--json", default=None, help="also write the report as JSON")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(parser, args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
