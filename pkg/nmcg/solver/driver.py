# -*- coding: utf-8 -*-

"""
Non-monotone conjugate gradient driver: backtracking, outer loop and run report
"""

from __future__ import annotations

import csv
import enum
import logging
import math
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, NamedTuple, Optional

import numpy as np

from ..core import DifferentiableProblem, EvalCounters, Evaluator
from ..errors import DimensionError, LineSearchFailure, NumericalError
from .config import SolverConfig
from .direction import BetaRule, bounded_beta, direction, ensure_descent, omega_adaptive
from .nonmonotone import NonmonotoneMemory, reference_value
from .stepsize import StepPair, cbb_step, clamp, initial_step


TRACE_COLUMNS = ("k", "f", "gnorm", "alpha", "eta", "beta", "flk", "Rk")


class SolverStatus(enum.Enum):
    Converged = "converged"
    IterationLimit = "iteration_limit"
    LineSearchFailure = "line_search_failure"
    NumericalError = "numerical_error"

    @classmethod
    def values(cls) -> set:
        return set(map(lambda c: c.value, cls))


@dataclass(slots=True)
class TraceRecord:
    """
    Iteration k: f = f_k, gnorm = ||g_k||, alpha = accepted alpha_k, alpha0 = trial
    step, eta = eta_k, omega = omega used to build d_k (0 for steepest descent),
    beta = beta_k computed for d_{k+1}, gtd = g_k'd_k, dnorm = ||d_k||,
    f_next = f_{k+1}.
    """

    k: int
    f: float
    gnorm: float
    alpha: float
    alpha0: float
    eta: float
    omega: float
    beta: float
    flk: float
    Rk: float
    gtd: float
    dnorm: float
    f_next: float


@dataclass(slots=True)
class SolverReport:
    status: SolverStatus
    iterations: int
    counters: EvalCounters
    final_gradient_norm: float
    final_value: float
    final_point: np.ndarray
    wall_time: float
    restarts: int = 0
    message: str = ""
    trace: Optional[list[TraceRecord]] = None

    @property
    def converged(self) -> bool:
        return self.status is SolverStatus.Converged


class Projection:
    """
    Feasible-set hooks used by minimize; the identity for unconstrained problems.
    """

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return x

    def reduced_gradient(self, x: np.ndarray, g: np.ndarray) -> np.ndarray:
        return g

    def restrict(self, x: np.ndarray, g: np.ndarray, d: np.ndarray) -> np.ndarray:
        return d


class NonnegativeOrthant(Projection):
    """
    Projection onto x >= 0 with the projected-gradient active set.

    A coordinate on the bound with a nonnegative gradient is held fixed, any
    other coordinate on the bound may only move inwards.
    """

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return np.maximum(x, 0.0)

    def reduced_gradient(self, x: np.ndarray, g: np.ndarray) -> np.ndarray:
        return np.where((x > 0) | (g < 0), g, 0.0)

    def restrict(self, x: np.ndarray, g: np.ndarray, d: np.ndarray) -> np.ndarray:
        d = np.where(x > 0, d, np.maximum(d, 0.0))
        return np.where((x > 0) | (g < 0), d, 0.0)


class BacktrackResult(NamedTuple):
    alpha: float
    f_new: float
    evals: int
    point: np.ndarray


def backtrack(
        objective: Callable[[np.ndarray], float],
        x: np.ndarray,
        d: np.ndarray,
        g: np.ndarray,
        R: float,
        alpha0: float,
        cfg: SolverConfig,
        projection: Optional[Projection] = None,
) -> BacktrackResult:
    """
    First alpha in {alpha0 rho^j} with f(x + alpha d) <= R + gamma alpha g'd.

    With a projection the trial point is P(x + alpha d) and the model decrease
    is g'(P(x + alpha d) - x), never positive.

    :param objective: Objective function
    :param x: Current point
    :param d: Descent direction
    :param g: Gradient at x
    :param R: Reference value R_k
    :param alpha0: Trial step
    :param cfg: Solver configuration
    :param projection: Feasible-set projection or None
    :return: Accepted step, objective value, number of evaluations and the new point
    """
    gtd = float(g @ d)
    alpha = alpha0
    evals = 0
    for _ in range(cfg.backtrack_cap + 1):
        trial = x + alpha * d
        if projection is None:
            decrease = alpha * gtd
        else:
            trial = projection(trial)
            decrease = min(float(g @ (trial - x)), 0.0)
        f_new = objective(trial)
        evals += 1
        if math.isfinite(f_new) and f_new <= R + cfg.gamma * decrease:
            return BacktrackResult(alpha, f_new, evals, trial)
        alpha *= cfg.rho
    raise LineSearchFailure(
        f"No acceptable step after {cfg.backtrack_cap} reductions (last trial alpha {alpha / cfg.rho:.3e})",
        alpha=alpha / cfg.rho,
        evals=evals,
    )


def require_finite(f: float, g: np.ndarray, where: str) -> None:
    """
    Raise NumericalError unless f and every gradient entry are finite.
    """
    if not (math.isfinite(f) and bool(np.all(np.isfinite(g)))):
        raise NumericalError(f"Non-finite objective or gradient {where}")


def minimize(
        problem: DifferentiableProblem,
        x0: Optional[np.ndarray] = None,
        cfg: Optional[SolverConfig] = None,
        *,
        beta_rule: Optional[BetaRule] = None,
        projection: Optional[Projection] = None,
        initial_alpha: Optional[float] = None,
        record_trace: bool = False,
        logger: Optional[logging.Logger] = None,
) -> SolverReport:
    """
    Minimize a smooth function with the non-monotone conjugate gradient method.

    Every outer iteration starts the backtracking at the convex-combination
    Barzilai-Borwein step, accepts against R_k, builds d_{k+1} with the bounded
    CG parameter and refreshes eta and the window of recent values.

    :param problem: Problem to minimize
    :param x0: Starting point (the problem's canonical start by default)
    :param cfg: Solver configuration
    :param beta_rule: Conjugate gradient parameter (bounded beta by default)
    :param projection: Feasible-set projection (unconstrained by default)
    :param initial_alpha: First trial step (1 / ||g_0|| by default)
    :param record_trace: Keep per-iteration records
    :param logger: Logger class
    :return: Run report
    """
    if logger is None:
        logger = logging.getLogger(__name__)
    if cfg is None:
        cfg = SolverConfig()
    if beta_rule is None:
        beta_rule = bounded_beta
    bounds = projection if projection is not None else Projection()

    x = np.array(problem.initial_point if x0 is None else x0, dtype=float).reshape(-1)
    if x.shape != (problem.dimension,):
        raise DimensionError(f"Start point has {x.size} entries, problem \"{problem.name}\" has {problem.dimension}")

    started = time.perf_counter()
    evaluator = Evaluator(problem)
    trace: Optional[list[TraceRecord]] = [] if record_trace else None
    x = bounds(x)
    f = evaluator.value(x)
    g = evaluator.gradient(x)

    def report(status: SolverStatus, k: int, message: str = "") -> SolverReport:
        return SolverReport(
            status=status,
            iterations=k,
            counters=evaluator.counters,
            final_gradient_norm=gnorm,
            final_value=f,
            final_point=x,
            wall_time=time.perf_counter() - started,
            restarts=restarts,
            message=message,
            trace=trace,
        )

    restarts = 0
    gr = bounds.reduced_gradient(x, g)
    gnorm = float(np.linalg.norm(gr))
    try:
        require_finite(f, g, "at the start point")
    except NumericalError as e:
        logger.warning(f"{problem.name}: {e}")
        return report(SolverStatus.NumericalError, 0, str(e))

    memory = NonmonotoneMemory.start(f, cfg.N, eta=cfg.eta_scheme.initial(gr))
    d = -gr
    omega = 0.0
    if initial_alpha is None:
        alpha0 = initial_step(gr, cfg.alpha_min, cfg.alpha_max)
    else:
        alpha0 = clamp(initial_alpha, cfg.alpha_min, cfg.alpha_max)
    logger.debug(f"{problem.name}: n={problem.dimension} f0={f:.6e} |g0|={gnorm:.3e}")

    k = 0
    status = SolverStatus.Converged
    message = ""
    while gnorm >= cfg.epsilon:
        if k >= cfg.max_iter:
            status = SolverStatus.IterationLimit
            break

        R = reference_value(memory, f)
        try:
            step = backtrack(evaluator.value, x, d, g, R, alpha0, cfg, projection)
        except LineSearchFailure as e:
            status, message = SolverStatus.LineSearchFailure, str(e)
            logger.warning(f"{problem.name}: iteration {k}: {e}")
            break

        x_new = step.point
        g_new = evaluator.gradient(x_new)
        try:
            require_finite(step.f_new, g_new, f"at iteration {k + 1}")
        except NumericalError as e:
            status, message = SolverStatus.NumericalError, str(e)
            logger.warning(f"{problem.name}: {e}")
            break

        gr_new = bounds.reduced_gradient(x_new, g_new)
        omega_new = cfg.omega if cfg.omega is not None else omega_adaptive(gr_new, gr, d)
        beta = beta_rule(gr_new, gr, d, omega_new)
        d_new = bounds.restrict(x_new, g_new, direction(gr_new, d, beta))
        d_new, restarted = ensure_descent(gr_new, d_new)
        if restarted:
            restarts += 1
            omega_new, beta = 0.0, 0.0
            logger.warning(f"{problem.name}: iteration {k + 1}: direction lost descent, restarting")

        if trace is not None:
            trace.append(TraceRecord(
                k=k, f=f, gnorm=gnorm, alpha=step.alpha, alpha0=alpha0, eta=memory.eta,
                omega=omega, beta=beta, flk=memory.f_lk, Rk=R, gtd=float(gr @ d),
                dnorm=float(np.linalg.norm(d)), f_next=step.f_new,
            ))

        alpha0 = cbb_step(StepPair(x_new - x, g_new - g), cfg.alpha_min, cfg.alpha_max)
        k += 1
        memory.push(step.f_new)
        memory.eta = cfg.eta_scheme.following(k, memory.eta, gr_new)
        x, f, g, gr, d, omega = x_new, step.f_new, g_new, gr_new, d_new, omega_new
        gnorm = float(np.linalg.norm(gr))

    result = report(status, k, message)
    logger.info(
        f"{problem.name}: {status.value} after {k} iterations, "
        f"f={f:.6e} |g|={gnorm:.3e} fevals={result.counters.function_evals} "
        f"gevals={result.counters.gradient_evals}"
    )
    return result


def write_trace_csv(trace: list[TraceRecord], path: str | Path) -> None:
    """
    Write the k,f,gnorm,alpha,eta,beta,flk,Rk columns of a run trace.
    """
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(TRACE_COLUMNS)
        for record in trace:
            writer.writerow([record.k] + [repr(float(getattr(record, column))) for column in TRACE_COLUMNS[1:]])
