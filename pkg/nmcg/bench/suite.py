# -*- coding: utf-8 -*-

"""
Solver x problem suites with per-run and profile CSV output
"""

from __future__ import annotations

import csv
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from ..core import DifferentiableProblem
from ..problems import make_problem
from ..solver import BetaRule, SolverConfig, SolverStatus, minimize
from .profile import Metric, ProfileTable, export_tau_grid, performance_ratios, profile


RUN_COLUMNS = ("problem", "n", "solver", "status", "iters", "fevals", "gevals", "time")
PROFILE_COLUMNS = ("solver", "tau", "p")
ERROR_STATUS = "error"

Instance = tuple[str, int] | DifferentiableProblem


@dataclass(frozen=True, slots=True)
class SolverSpec:
    """
    A named solver variant; beta_rule plugs in another CG parameter.
    """

    name: str
    config: SolverConfig
    beta_rule: Optional[BetaRule] = None


@dataclass(slots=True)
class RunRecord:
    problem: str
    n: int
    solver: str
    status: str
    iterations: int
    function_evals: int
    gradient_evals: int
    time: float

    @property
    def failed(self) -> bool:
        return self.status != SolverStatus.Converged.value

    def metric(self, metric: Metric) -> float:
        return float(getattr(self, metric.value))


@dataclass(slots=True)
class SuiteResult:
    runs: list[RunRecord]
    tables: dict[Metric, ProfileTable]


def _describe(instance: Instance) -> tuple[str, int]:
    if isinstance(instance, DifferentiableProblem):
        return instance.name, instance.dimension
    name, n = instance
    return name, int(n)


def run_one(spec: SolverSpec, instance: Instance, logger: Optional[logging.Logger] = None) -> RunRecord:
    """
    Solve one instance; failures of any kind become a failed record.
    """
    if logger is None:
        logger = logging.getLogger(__name__)
    name, n = _describe(instance)
    try:
        problem = instance if isinstance(instance, DifferentiableProblem) else make_problem(name, n)
        report = minimize(problem, cfg=spec.config, beta_rule=spec.beta_rule, logger=logger)
        return RunRecord(
            name, n, spec.name, report.status.value, report.iterations,
            report.counters.function_evals, report.counters.gradient_evals, report.wall_time,
        )
    except Exception as e:
        logger.error(f"{spec.name} on {name} (n={n}): {e}")
        return RunRecord(name, n, spec.name, ERROR_STATUS, 0, 0, 0, 0.0)


def build_tables(runs: Sequence[RunRecord], metrics: Iterable[Metric]) -> dict[Metric, ProfileTable]:
    problems = list(dict.fromkeys(f"{r.problem}[{r.n}]" for r in runs))
    solvers = list(dict.fromkeys(r.solver for r in runs))
    row = {p: i for i, p in enumerate(problems)}
    col = {s: j for j, s in enumerate(solvers)}
    tables = {}
    for metric in metrics:
        values = np.zeros((len(problems), len(solvers)))
        failed = np.ones((len(problems), len(solvers)), dtype=bool)
        for r in runs:
            i, j = row[f"{r.problem}[{r.n}]"], col[r.solver]
            values[i, j] = r.metric(metric)
            failed[i, j] = r.failed
        tables[metric] = ProfileTable(metric, problems, solvers, values, failed)
    return tables


def run_suite(
        solvers: Sequence[SolverSpec],
        instances: Sequence[Instance],
        metrics: Optional[Iterable[Metric | str]] = None,
        out_path: Optional[str | Path] = None,
        profiles_path: Optional[str | Path] = None,
        *,
        workers: Optional[int] = None,
        sequential: bool = False,
        logger: Optional[logging.Logger] = None,
) -> SuiteResult:
    """
    Run every solver on every instance and collect the profile tables.

    :param solvers: Solver variants
    :param instances: (family, n) pairs or ready problems
    :param metrics: Metrics to tabulate (all by default)
    :param out_path: Per-run CSV
    :param profiles_path: Profile CSV, one file per metric
    :param workers: Thread pool size
    :param sequential: Run one pair at a time (clean timings)
    :param logger: Logger class
    :return: Runs and profile tables
    """
    if logger is None:
        logger = logging.getLogger(__name__)
    if not solvers or not instances:
        raise ValueError("Suite needs at least one solver and one problem instance")
    metrics = list(Metric) if metrics is None else [Metric(m) for m in metrics]

    pairs = [(spec, instance) for instance in instances for spec in solvers]
    logger.info(f"Running {len(pairs)} solver runs ({len(solvers)} solvers x {len(instances)} instances)")
    if sequential or workers == 1:
        runs = [run_one(spec, instance, logger) for spec, instance in pairs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(lambda pair: run_one(pair[0], pair[1], logger), pairs))

    failures = sum(r.failed for r in runs)
    logger.info(f"Suite finished: {len(runs) - failures} solved, {failures} failed")

    tables = build_tables(runs, metrics)
    if out_path is not None:
        write_runs_csv(runs, out_path)
    if profiles_path is not None:
        for metric, path in profile_paths(profiles_path, tables).items():
            write_profile_csv(tables[metric], path, logger)
    return SuiteResult(runs, tables)


def write_runs_csv(runs: Iterable[RunRecord], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(RUN_COLUMNS)
        for r in runs:
            writer.writerow([
                r.problem, r.n, r.solver, r.status, r.iterations, r.function_evals, r.gradient_evals, f"{r.time:.6f}",
            ])


def profile_paths(path: str | Path, metrics: Iterable[Metric]) -> dict[Metric, Path]:
    """
    profiles.csv -> profiles_iterations.csv, profiles_time.csv, ...
    """
    path = Path(path)
    return {metric: path.with_name(f"{path.stem}_{metric.value}{path.suffix}") for metric in metrics}


def write_profile_csv(table: ProfileTable, path: str | Path, logger: Optional[logging.Logger] = None) -> None:
    ratios = performance_ratios(table, logger)
    grid = export_tau_grid(ratios)
    p = profile(ratios, grid)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(PROFILE_COLUMNS)
        for j, solver in enumerate(table.solvers):
            for tau, value in zip(grid, p[j]):
                writer.writerow([solver, f"{tau:.10g}", f"{value:.10g}"])
