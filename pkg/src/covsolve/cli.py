"""Command line interface: solve, verify, transform, generate, and benchmark.

Exit codes are uniform across commands: 0 for YES/valid, 1 for NO/invalid,
and 2 for usage, parse, or contract errors, so shell pipelines can compare
solvers without scraping stdout.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from pathlib import Path

from .branch import (
    solve_capacities,
    solve_capacities_multi,
    solve_capacities_priced,
    solve_demands,
    solve_demands_multi,
    solve_demands_priced,
    solve_priced_anyk,
)
from .bribery import apply_bribe, socially_qualified, solve_bribery_general, solve_bribery_t1
from .core import Mode, extremal_stats, verify
from .formats import (
    ParseError,
    parse_bribery,
    parse_bribes,
    parse_setcover,
    parse_solution,
    serialize_bribes,
    serialize_setcover,
    serialize_solution,
)
from .generate import generate_bribery, generate_setcover
from .oracle import EnumerationLimitError, brute_decision
from .threshold import solve_capacities_threshold, solve_demands_threshold
from .transform import TriviallyInfeasible, complement

ALGORITHMS = ("branch", "threshold", "brute")


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _branch_solve(instance):
    priced = instance.prices is not None
    if priced and instance.multiplicities:
        raise ValueError("priced instances with multiplicities are not supported")
    if instance.mode is Mode.CAPACITIES:
        if priced:
            return solve_capacities_priced(instance)
        if instance.multiplicities:
            return solve_capacities_multi(instance)
        return solve_capacities(instance)
    if priced:
        return solve_demands_priced(instance)
    if instance.multiplicities:
        return solve_demands_multi(instance)
    return solve_demands(instance)


def _threshold_solve(instance):
    if instance.mode is Mode.CAPACITIES:
        return solve_capacities_threshold(instance)
    return solve_demands_threshold(instance)


def _cmd_solve(args) -> int:
    instance = parse_setcover(_read(args.instance))
    stats = None
    if args.any_k:
        if args.algorithm != "branch":
            raise ValueError("--any-k works with the branch algorithm only")
        solution = solve_priced_anyk(instance)
    elif args.algorithm == "branch":
        solution, stats = _branch_solve(instance)
    elif args.algorithm == "threshold":
        solution = _threshold_solve(instance)
    else:
        solution = brute_decision(instance)
    if solution is None:
        print("NO")
        return 1
    print("YES")
    sys.stdout.write(serialize_solution(solution))
    if args.stats and stats is not None:
        print(f"nodes={stats.nodes_visited} branches={stats.branches_taken} depth={stats.max_depth}")
    return 0


def _cmd_verify(args) -> int:
    instance = parse_setcover(_read(args.instance))
    solution = parse_solution(_read(args.solution))
    verdict = verify(instance, solution)
    if verdict:
        print("valid")
        return 0
    print(f"invalid: {verdict.reason}")
    return 1


def _cmd_transform(args) -> int:
    instance = parse_setcover(_read(args.instance))
    sys.stdout.write(serialize_setcover(complement(instance)))
    return 0


def _cmd_gen_setcover(args) -> int:
    instance = generate_setcover(
        args.seed,
        args.n,
        args.m,
        args.k,
        Mode(args.mode),
        args.density,
        multiplicities=args.multiplicities,
        priced=args.priced,
        price_max=args.price_max,
    )
    sys.stdout.write(serialize_setcover(instance))
    return 0


def _cmd_gen_bribery(args) -> int:
    from .formats import serialize_bribery

    instance = generate_bribery(
        args.seed, args.n, args.s, args.t, args.ell, args.targets, args.positive_rate
    )
    sys.stdout.write(serialize_bribery(instance))
    return 0


def _cmd_bribery_solve(args) -> int:
    instance = parse_bribery(_read(args.instance))
    solver = solve_bribery_t1 if instance.t == 1 else solve_bribery_general
    bribes = solver(instance)
    if bribes is None:
        print("NO")
        return 1
    print("YES")
    sys.stdout.write(serialize_bribes(bribes))
    return 0


def _cmd_bribery_verify(args) -> int:
    instance = parse_bribery(_read(args.instance))
    bribes = parse_bribes(_read(args.bribes))
    if len(bribes) > instance.ell:
        print(f"invalid: {len(bribes)} bribes exceed budget {instance.ell}")
        return 1
    after = apply_bribe(instance.profile, bribes)
    qualified = socially_qualified(after, instance.s, instance.t)
    missing = [a for a in instance.targets if a not in qualified]
    if missing:
        print(f"invalid: target {missing[0]} not socially qualified")
        return 1
    print("valid")
    return 0


def _cmd_bench(args) -> int:
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    for algorithm in algorithms:
        if algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {algorithm!r}")
    if not algorithms:
        raise ValueError("no algorithms given")
    if "threshold" in algorithms and (args.multiplicities or args.priced):
        raise ValueError("threshold cannot run on multiplicity or priced instances")
    if "branch" in algorithms and args.multiplicities and args.priced:
        raise ValueError("priced instances with multiplicities are not supported")
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(
        ["seed", "algorithm", "n", "m", "k", "s_max", "o_max", "answer", "nodes", "micros"]
    )
    for repeat in range(args.repeat):
        seed = args.seed + repeat
        instance = generate_setcover(
            seed,
            args.n,
            args.m,
            args.k,
            Mode(args.mode),
            args.density,
            multiplicities=args.multiplicities,
            priced=args.priced,
            price_max=args.price_max,
        )
        stats_in = extremal_stats(instance)
        for algorithm in algorithms:
            nodes = ""
            start = time.perf_counter_ns()
            if algorithm == "branch":
                solution, stats = _branch_solve(instance)
                nodes = stats.nodes_visited
            elif algorithm == "threshold":
                solution = _threshold_solve(instance)
            else:
                solution = brute_decision(instance)
            micros = (time.perf_counter_ns() - start) // 1000
            writer.writerow(
                [
                    seed,
                    algorithm,
                    instance.n,
                    instance.m,
                    instance.k,
                    stats_in.s_max,
                    stats_in.o_max,
                    "YES" if solution is not None else "NO",
                    nodes,
                    micros,
                ]
            )
    return 0


def _add_gen_setcover_options(parser) -> None:
    parser.add_argument("-n", type=int, required=True, help="universe size")
    parser.add_argument("-m", type=int, required=True, help="family size")
    parser.add_argument("-k", type=int, required=True, help="selection size")
    parser.add_argument("--mode", choices=("demands", "capacities"), required=True)
    parser.add_argument("--density", type=float, default=0.5, help="element membership probability")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--multiplicities", action="store_true")
    parser.add_argument("--priced", action="store_true")
    parser.add_argument("--price-max", type=int, default=5)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covsolve",
        description="Exact solvers for set cover with demands or capacities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide an instance file")
    p.add_argument("instance")
    p.add_argument("--algorithm", choices=ALGORITHMS, default="branch")
    p.add_argument("--stats", action="store_true", help="print search counters (branch only)")
    p.add_argument("--any-k", action="store_true", help="ignore k and sweep sizes up to the price budget")
    p.set_defaults(run=_cmd_solve)

    p = sub.add_parser("verify", help="check a solution file against an instance")
    p.add_argument("instance")
    p.add_argument("solution")
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("transform", help="print the complemented instance")
    p.add_argument("instance")
    p.set_defaults(run=_cmd_transform)

    p = sub.add_parser("gen", help="generate a seeded random instance")
    gen_sub = p.add_subparsers(dest="what", required=True)
    g = gen_sub.add_parser("setcover")
    _add_gen_setcover_options(g)
    g.set_defaults(run=_cmd_gen_setcover)
    g = gen_sub.add_parser("bribery")
    g.add_argument("-n", type=int, required=True, help="agent count")
    g.add_argument("-s", type=int, required=True)
    g.add_argument("-t", type=int, required=True)
    g.add_argument("--ell", type=int, required=True, help="bribe budget")
    g.add_argument("--targets", type=int, required=True, help="number of target agents")
    g.add_argument("--positive-rate", type=float, default=0.5)
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(run=_cmd_gen_bribery)

    p = sub.add_parser("bribery", help="bribery instances")
    bsub = p.add_subparsers(dest="what", required=True)
    b = bsub.add_parser("solve")
    b.add_argument("instance")
    b.set_defaults(run=_cmd_bribery_solve)
    b = bsub.add_parser("verify")
    b.add_argument("instance")
    b.add_argument("bribes")
    b.set_defaults(run=_cmd_bribery_verify)

    p = sub.add_parser("bench", help="time solvers on generated instances, CSV on stdout")
    _add_gen_setcover_options(p)
    p.add_argument("--algorithms", default="branch", help="comma-separated list")
    p.add_argument("--repeat", type=int, default=1)
    p.set_defaults(run=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.run(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TriviallyInfeasible as exc:
        print(f"error: cannot transform: {exc}", file=sys.stderr)
        return 2
    except (EnumerationLimitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
