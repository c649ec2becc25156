# -*- coding: utf-8 -*-

"""
Command line interface: solve, list-problems, bench, nmf
"""

from __future__ import annotations

import argparse
import enum
import logging
from typing import Mapping, Optional, Sequence

import numpy as np

from .bench import Metric, SolverSpec, run_suite
from .errors import NmcgError
from .logger import console_logger
from .nmf import NmfConfig, load_matrix_csv, nmf_benchmark, write_nmf_csv
from .problems import CANONICAL_DIMENSIONS, PROBLEMS, format_optimum, list_problems, make_problem, suite_instances
from .solver import EtaScheme, SolverConfig, minimize, parse_omega, write_trace_csv


ALL = "all"


class Commands(enum.Enum):
    solve = "solve"
    list_problems = "list-problems"
    bench = "bench"
    nmf = "nmf"

    @classmethod
    def values(cls) -> set:
        return set(map(lambda c: c.value, cls))


def _csv_list(value: str) -> list[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Non-monotone conjugate gradient method, test problems, performance profiles and ANLS NMF",
        epilog="Good bye!",
    )
    parser.add_argument("--log-level", type=str, default=None, help="Logging level (NMCG_LOG_LEVEL by default)")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser(Commands.solve.value, help="Solve one test problem")
    solve.add_argument("--problem", type=str, required=True, choices=sorted(PROBLEMS), help="Problem family")
    solve.add_argument("--dim", type=int, default=None, help="Dimension n")
    solve.add_argument("--eta-scheme", type=str, choices=EtaScheme.values(), help="Non-monotone parameter scheme")
    solve.add_argument("--omega", type=str, help="\"adaptive\" or a fixed value in (0, 1)")
    solve.add_argument("--tol", type=float, help="Gradient norm tolerance")
    solve.add_argument("--max-iter", type=int, help="Iteration limit")
    solve.add_argument("--memory", type=int, help="Window cap N")
    solve.add_argument("--trace", type=str, help="CSV file for the iteration trace")

    commands.add_parser(Commands.list_problems.value, help="List registered problems")

    bench = commands.add_parser(Commands.bench.value, help="Run a suite and emit performance profiles")
    bench.add_argument("--solvers", type=str, default=",".join(sorted(EtaScheme.values())),
                       help="Comma separated eta schemes")
    bench.add_argument("--families", type=str, default=ALL, help="Comma separated families or \"all\"")
    bench.add_argument("--dims", type=str, default=",".join(map(str, CANONICAL_DIMENSIONS)),
                       help="Comma separated dimensions")
    bench.add_argument("--metrics", type=str, default=ALL, help="Comma separated metrics or \"all\"")
    bench.add_argument("--out", type=str, default="runs.csv", help="Per-run CSV")
    bench.add_argument("--profiles", type=str, default="profiles.csv", help="Profile CSV (one file per metric)")
    bench.add_argument("--workers", type=int, default=None, help="Worker threads")
    bench.add_argument("--sequential-timing", action="store_true", help="Run pairs one at a time")

    nmf = commands.add_parser(Commands.nmf.value, help="ANLS non-negative matrix factorization")
    nmf.add_argument("--m", type=int, default=100, help="Rows of the random matrix")
    nmf.add_argument("--n", type=int, default=50, help="Columns of the random matrix")
    nmf.add_argument("--rank", type=int, default=5, help="Factorization rank k")
    nmf.add_argument("--seeds", type=int, default=10, help="Number of runs (seeds 0..seeds-1)")
    nmf.add_argument("--eps", type=float, help="Relative stopping tolerance")
    nmf.add_argument("--outer-cap", type=int, help="Maximum number of outer iterations")
    nmf.add_argument("--projected-stop", action="store_true", help="Stop on the projected gradient norm")
    nmf.add_argument("--stall-tol", type=float,
                     help="Stop once a sweep improves the error by at most this share of its initial value")
    nmf.add_argument("--eta-scheme", type=str, choices=EtaScheme.values(), help="Non-monotone parameter scheme")
    nmf.add_argument("--input", type=str, help="CSV matrix to factorize instead of random data")
    nmf.add_argument("--out", type=str, help="Report CSV")
    return parser


def _solver_config(config: Mapping[str, Optional[str]], args: argparse.Namespace) -> SolverConfig:
    cfg = SolverConfig.from_env(config)
    changes = {}
    if getattr(args, "eta_scheme", None):
        changes["eta_scheme"] = EtaScheme(args.eta_scheme)
    if getattr(args, "omega", None) is not None:
        changes["omega"] = parse_omega(args.omega)
    if getattr(args, "tol", None) is not None:
        changes["epsilon"] = args.tol
    if getattr(args, "max_iter", None) is not None:
        changes["max_iter"] = args.max_iter
    if getattr(args, "memory", None) is not None:
        changes["N"] = args.memory
    return cfg.replace(**changes) if changes else cfg


def _solve(config: Mapping[str, Optional[str]], args: argparse.Namespace, logger: logging.Logger) -> None:
    cfg = _solver_config(config, args)
    problem = make_problem(args.problem, args.dim)
    report = minimize(problem, cfg=cfg, record_trace=args.trace is not None, logger=logger)
    print(f"problem:     {problem.name} (n={problem.dimension})")
    print(f"status:      {report.status.value}")
    print(f"iterations:  {report.iterations}")
    print(f"fevals:      {report.counters.function_evals}")
    print(f"gevals:      {report.counters.gradient_evals}")
    print(f"f:           {report.final_value:.10e}")
    print(f"|g|:         {report.final_gradient_norm:.3e}")
    print(f"time:        {report.wall_time:.4f} s")
    if report.message:
        print(f"message:     {report.message}")
    if args.trace is not None:
        write_trace_csv(report.trace or [], args.trace)
        print(f"trace:       {args.trace}")


def _list_problems() -> None:
    print("name\tvalid dimensions\tknown optimum (default n)\tformula")
    for spec in list_problems():
        n = spec.default_dimension
        print(f"{spec.name}\t{spec.valid_dimensions}\t{format_optimum(spec, n)} (n={n})\t{spec.formula}")


def _bench(config: Mapping[str, Optional[str]], args: argparse.Namespace, logger: logging.Logger) -> None:
    base = SolverConfig.from_env(config)
    solvers = [SolverSpec(name, base.replace(eta_scheme=EtaScheme(name))) for name in _csv_list(args.solvers)]
    families = None if args.families == ALL else _csv_list(args.families)
    metrics = list(Metric) if args.metrics == ALL else [Metric(m) for m in _csv_list(args.metrics)]
    instances = suite_instances(families, [int(d) for d in _csv_list(args.dims)])
    result = run_suite(
        solvers, instances, metrics, args.out, args.profiles,
        workers=args.workers, sequential=args.sequential_timing, logger=logger,
    )
    for spec in solvers:
        runs = [r for r in result.runs if r.solver == spec.name]
        solved = sum(not r.failed for r in runs)
        print(f"{spec.name}: solved {solved} of {len(runs)}")
    print(f"runs:        {args.out}")
    print(f"profiles:    {args.profiles} (one file per metric)")


def _nmf(config: Mapping[str, Optional[str]], args: argparse.Namespace, logger: logging.Logger) -> None:
    nmf_config = NmfConfig.from_env(config)
    changes = dict(solver=_solver_config(config, args))
    if args.eps is not None:
        changes["epsilon"] = args.eps
    if args.outer_cap is not None:
        changes["outer_cap"] = args.outer_cap
    if args.projected_stop:
        changes["projected_stop"] = True
    if args.stall_tol is not None:
        changes["stall_tol"] = args.stall_tol
    nmf_config = nmf_config.replace(**changes)

    V = load_matrix_csv(args.input) if args.input else None
    runs = nmf_benchmark(args.m, args.n, args.rank, range(args.seeds), nmf_config, V=V, logger=logger)
    print("m\tn\tk\tseed\titer\tniter\tpgn\ttime\terror")
    for run in runs:
        r = run.report
        print(f"{run.m}\t{run.n}\t{run.k}\t{run.seed}\t{r.iterations}\t{r.inner_iterations}\t"
              f"{r.pgn:.4g}\t{r.elapsed:.3f}\t{r.error:.4g}")
    if runs:
        print(f"mean\t\t\t\t{np.mean([r.report.iterations for r in runs]):.2f}\t"
              f"{np.mean([r.report.inner_iterations for r in runs]):.2f}\t"
              f"{np.mean([r.report.pgn for r in runs]):.4g}\t{np.mean([r.report.elapsed for r in runs]):.3f}\t"
              f"{np.mean([r.report.error for r in runs]):.4g}")
    if args.out:
        write_nmf_csv(runs, args.out)
        print(f"report:      {args.out}")


def cli(config: Optional[Mapping[str, Optional[str]]] = None, argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse the command line and run the command.

    :param config: dotenv values (NMCG_* keys)
    :param argv: Arguments (sys.argv by default)
    :return: Exit status
    """
    config = config or {}
    args = build_parser().parse_args(argv)
    try:
        logger = console_logger("nmcg", args.log_level or config.get("NMCG_LOG_LEVEL"))
        match Commands(args.command):
            case Commands.solve:
                _solve(config, args, logger)
            case Commands.list_problems:
                _list_problems()
            case Commands.bench:
                _bench(config, args, logger)
            case Commands.nmf:
                _nmf(config, args, logger)
    except (NmcgError, ValueError, OSError) as e:
        print(e)
        return 1
    return 0
