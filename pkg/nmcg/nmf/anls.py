# -*- coding: utf-8 -*-

"""
Non-negative matrix factorization by alternating non-negative least squares

Both convex subproblems, min_{W>=0} F(W, H) and min_{H>=0} F(W, H), are solved
inexactly by the non-monotone conjugate gradient solver with every trial point
projected onto the non-negative orthant.
"""

from __future__ import annotations

import csv
import dataclasses
import enum
import logging
import math
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple, Optional

import numpy as np
from typing_extensions import Self

from ..core import DifferentiableProblem
from ..errors import DimensionError, PreconditionError
from ..solver import NonnegativeOrthant, SolverConfig, SolverStatus, minimize


NMF_COLUMNS = ("m", "n", "k", "seed", "iter", "niter", "pgn", "time", "error", "algorithm")

EPS = float(np.finfo(float).eps)

# inner runs are numerous; only their warnings are of interest
_inner_logger = logging.getLogger(__name__ + ".inner")
_inner_logger.setLevel(logging.WARNING)


class GradientMeasure(enum.Enum):
    """
    Which components of the stacked gradient enter its norm.
    """

    Full = "full"
    Support = "support"  # entries where the factor is positive
    Projected = "projected"  # drops entries held at the bound (factor 0, gradient >= 0)


@dataclass(slots=True)
class NmfConfig:
    """
    ANLS settings: outer stopping rule and the inexact inner solves.
    """

    epsilon: float = 1e-4
    outer_cap: int = 200
    inner_tol: float = 1e-4  # relative to the first inner projected gradient norm
    inner_max_iter: int = 50
    projected_stop: bool = False
    stall_tol: float = 1e-4  # error improvement per sweep, relative to the initial error
    solver: SolverConfig = field(default_factory=SolverConfig)

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.outer_cap < 0:
            raise ValueError(f"outer_cap must be nonnegative, got {self.outer_cap}")
        if not self.inner_tol > 0:
            raise ValueError(f"inner_tol must be positive, got {self.inner_tol}")
        if self.inner_max_iter < 1:
            raise ValueError(f"inner_max_iter must be positive, got {self.inner_max_iter}")
        if not self.stall_tol >= 0:
            raise ValueError(f"stall_tol must be nonnegative, got {self.stall_tol}")

    @property
    def stop_measure(self) -> GradientMeasure:
        return GradientMeasure.Projected if self.projected_stop else GradientMeasure.Support

    def replace(self, **changes) -> Self:
        return dataclasses.replace(self, **changes)

    @classmethod
    def from_env(cls, values: Mapping[str, Optional[str]]) -> Self:
        kwargs = dict(solver=SolverConfig.from_env(values))
        for name, key, convert in (
                ("epsilon", "NMCG_NMF_EPSILON", float),
                ("outer_cap", "NMCG_NMF_OUTER_CAP", int),
                ("inner_tol", "NMCG_NMF_INNER_TOL", float),
                ("inner_max_iter", "NMCG_NMF_INNER_MAX_ITER", int),
                ("projected_stop", "NMCG_NMF_PROJECTED_STOP", lambda v: v.strip().lower() in ("1", "true", "yes")),
                ("stall_tol", "NMCG_NMF_STALL_TOL", float),
        ):
            raw = values.get(key)
            if raw is not None and raw != "":
                kwargs[name] = convert(raw)
        return cls(**kwargs)


@dataclass(slots=True)
class NmfReport:
    iterations: int  # Iter
    inner_iterations: int  # Niter
    pgn: float
    elapsed: float  # Time, seconds
    error: float
    objective_history: list[float] = field(default_factory=list)
    subproblem_warnings: int = 0


class SubproblemResult(NamedTuple):
    factor: np.ndarray
    iterations: int
    warning: bool


@dataclass(slots=True)
class NmfRun:
    m: int
    n: int
    k: int
    seed: int
    report: NmfReport
    algorithm: str


def _check_shapes(V: np.ndarray, W: np.ndarray, H: np.ndarray) -> None:
    if V.ndim != 2 or W.ndim != 2 or H.ndim != 2:
        raise DimensionError("V, W and H must be matrices")
    if W.shape[0] != V.shape[0] or H.shape[1] != V.shape[1] or W.shape[1] != H.shape[0]:
        raise DimensionError(f"Shapes do not conform: V {V.shape}, W {W.shape}, H {H.shape}")


def nmf_objective(V: np.ndarray, W: np.ndarray, H: np.ndarray) -> float:
    """
    F(W, H) = 0.5 ||V - WH||_F^2.
    """
    _check_shapes(V, W, H)
    residual = V - W @ H
    return 0.5 * float(np.sum(residual * residual))


def nmf_gradients(V: np.ndarray, W: np.ndarray, H: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    (grad_W F, grad_H F) = ((WH - V)H', W'(WH - V)).
    """
    _check_shapes(V, W, H)
    residual = W @ H - V
    return residual @ H.T, W.T @ residual


def stacked_gradient_norm(
        V: np.ndarray,
        W: np.ndarray,
        H: np.ndarray,
        measure: GradientMeasure = GradientMeasure.Full,
) -> float:
    """
    ||[grad_H F, grad_W F]||_F over the components selected by measure.

    The full gradient keeps a positive component at every factor entry that
    sits on the bound, so only the support and projected measures vanish at a
    constrained minimizer.

    :param V: Data matrix
    :param W: Left factor
    :param H: Right factor
    :param measure: Components entering the norm
    :return: Stacked Frobenius norm
    """
    grad_w, grad_h = nmf_gradients(V, W, H)
    match measure:
        case GradientMeasure.Support:
            grad_w, grad_h = grad_w[W > 0], grad_h[H > 0]
        case GradientMeasure.Projected:
            grad_w = grad_w[(grad_w < 0) | (W > 0)]
            grad_h = grad_h[(grad_h < 0) | (H > 0)]
    return float(np.sqrt(np.sum(grad_w * grad_w) + np.sum(grad_h * grad_h)))


def relative_error(V: np.ndarray, W: np.ndarray, H: np.ndarray) -> float:
    """
    ||V - WH||_F / ||V||_F (absolute residual norm for V = 0).
    """
    _check_shapes(V, W, H)
    residual = float(np.linalg.norm(V - W @ H))
    scale = float(np.linalg.norm(V))
    return residual / scale if scale > 0 else residual


def initial_factors(m: int, n: int, k: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Uniform [0, 1] starting factors W (m x k) and H (k x n).
    """
    rng = np.random.default_rng(seed)
    return rng.uniform(0.0, 1.0, (m, k)), rng.uniform(0.0, 1.0, (k, n))


def random_matrix(m: int, n: int, seed: int) -> np.ndarray:
    """
    Uniform [0, 1] data matrix, drawn from a stream independent of the factors.
    """
    return np.random.default_rng([seed, 0]).uniform(0.0, 1.0, (m, n))


def _left_factor_problem(V: np.ndarray, H: np.ndarray, W_start: np.ndarray) -> DifferentiableProblem:
    m, k = W_start.shape
    HHt = H @ H.T
    VHt = V @ H.T

    def value(w: np.ndarray) -> float:
        residual = V - w.reshape(m, k) @ H
        return 0.5 * float(np.sum(residual * residual))

    def gradient(w: np.ndarray) -> np.ndarray:
        return (w.reshape(m, k) @ HHt - VHt).reshape(-1)

    return DifferentiableProblem(name="nmf_factor", dimension=m * k, value=value, gradient=gradient,
                                 initial_point=W_start.reshape(-1))


def rounding_floor(value: float, lipschitz: float) -> float:
    """
    Reduced gradient norm below which no step of a quadratic with gradient
    Lipschitz constant lipschitz lowers value by more than its rounding error.

    The best decrease along the gradient is ||g||^2 / (2L); it is visible in
    floating point only while it exceeds eps |value|. The floor keeps a factor
    10 above that level.
    """
    return 10.0 * math.sqrt(2.0 * lipschitz * EPS * abs(value))


def solve_subproblem_W(
        V: np.ndarray,
        H: np.ndarray,
        W_start: np.ndarray,
        config: Optional[NmfConfig] = None,
        logger: Optional[logging.Logger] = None,
) -> SubproblemResult:
    """
    Approximately minimize F(., H) over W >= 0, starting from W_start.

    The first trial step is 1 / ||HH'||_2. A start whose reduced gradient is
    under rounding_floor is returned as converged after 0 iterations.

    :param V: Data matrix
    :param H: Fixed right factor
    :param W_start: Non-negative start
    :param config: ANLS settings
    :param logger: Logger class
    :return: New factor, inner iterations and the failure warning flag
    """
    if logger is None:
        logger = logging.getLogger(__name__)
    if config is None:
        config = NmfConfig()
    V, H, W_start = (np.asarray(a, dtype=float) for a in (V, H, W_start))
    _check_shapes(V, W_start, H)
    if np.any(H < 0) or np.any(W_start < 0):
        raise PreconditionError("Subproblem factors must be non-negative")

    problem = _left_factor_problem(V, H, W_start)
    orthant = NonnegativeOrthant()
    start = problem.initial_point
    lipschitz = float(np.linalg.norm(H @ H.T, 2))
    noise = rounding_floor(problem.value(start), lipschitz)
    first_norm = float(np.linalg.norm(orthant.reduced_gradient(start, problem.gradient(start))))
    if first_norm <= noise:
        return SubproblemResult(W_start.copy(), 0, False)

    cfg = config.solver.replace(epsilon=max(config.inner_tol * first_norm, noise), max_iter=config.inner_max_iter)
    report = minimize(problem, start, cfg, projection=orthant, initial_alpha=1.0 / lipschitz, logger=_inner_logger)
    if report.status in (SolverStatus.LineSearchFailure, SolverStatus.NumericalError):
        logger.warning(f"Subproblem {report.status.value}: factor kept unchanged ({report.message})")
        return SubproblemResult(W_start.copy(), report.iterations, True)
    return SubproblemResult(report.final_point.reshape(W_start.shape).copy(), report.iterations, False)


def solve_subproblem_H(
        V: np.ndarray,
        W: np.ndarray,
        H_start: np.ndarray,
        config: Optional[NmfConfig] = None,
        logger: Optional[logging.Logger] = None,
) -> SubproblemResult:
    """
    Approximately minimize F(W, .) over H >= 0 (the W subproblem of V').
    """
    result = solve_subproblem_W(V.T, W.T, H_start.T, config, logger)
    return SubproblemResult(np.ascontiguousarray(result.factor.T), result.iterations, result.warning)


def anls(
        V: np.ndarray,
        k: int,
        epsilon: Optional[float] = None,
        outer_cap: Optional[int] = None,
        seed: int = 0,
        *,
        config: Optional[NmfConfig] = None,
        logger: Optional[logging.Logger] = None,
) -> tuple[np.ndarray, np.ndarray, NmfReport]:
    """
    Factorize V ~ WH with W, H >= 0.

    Starts from uniform random factors and alternates the W and H subproblems
    until the stacked gradient norm (support or projected components, see
    NmfConfig.projected_stop) falls to epsilon times its initial value, a sweep
    improves ||V - WH||_F by at most stall_tol times its initial value, or
    outer_cap sweeps are done.

    :param V: Non-negative data matrix (m x n)
    :param k: Rank
    :param epsilon: Relative stopping tolerance (config value by default)
    :param outer_cap: Maximum number of sweeps (config value by default)
    :param seed: Seed of the starting factors
    :param config: ANLS settings
    :param logger: Logger class
    :return: W, H and the run report
    """
    if logger is None:
        logger = logging.getLogger(__name__)
    if config is None:
        config = NmfConfig()
    if epsilon is not None or outer_cap is not None:
        config = config.replace(
            epsilon=config.epsilon if epsilon is None else epsilon,
            outer_cap=config.outer_cap if outer_cap is None else outer_cap,
        )

    V = np.asarray(V, dtype=float)
    if V.ndim != 2:
        raise DimensionError(f"V must be a matrix, got shape {V.shape}")
    if not np.all(np.isfinite(V)) or np.any(V < 0):
        raise PreconditionError("V must be finite and non-negative")
    m, n = V.shape
    if not 1 <= k <= min(m, n):
        raise DimensionError(f"Rank must lie in [1, {min(m, n)}], got {k}")

    started = time.perf_counter()
    W, H = initial_factors(m, n, k, seed)
    initial_norm = stacked_gradient_norm(V, W, H, config.stop_measure)
    pgn = initial_norm
    history = [nmf_objective(V, W, H)]
    initial_error = math.sqrt(2.0 * history[0])
    outer = inner = warnings = 0

    while pgn > config.epsilon * initial_norm and outer < config.outer_cap:
        step_w = solve_subproblem_W(V, H, W, config, logger)
        W = step_w.factor
        step_h = solve_subproblem_H(V, W, H, config, logger)
        H = step_h.factor
        outer += 1
        inner += step_w.iterations + step_h.iterations
        warnings += int(step_w.warning) + int(step_h.warning)
        history.append(nmf_objective(V, W, H))
        pgn = stacked_gradient_norm(V, W, H, config.stop_measure)
        logger.debug(f"ANLS sweep {outer}: F={history[-1]:.6e} pgn={pgn:.3e}")
        improvement = math.sqrt(2.0 * history[-2]) - math.sqrt(2.0 * history[-1])
        if improvement <= config.stall_tol * initial_error:
            logger.debug(f"ANLS stalled after {outer} sweeps (error improvement {improvement:.3e})")
            break

    report = NmfReport(
        iterations=outer,
        inner_iterations=inner,
        pgn=pgn,
        elapsed=time.perf_counter() - started,
        error=relative_error(V, W, H),
        objective_history=history,
        subproblem_warnings=warnings,
    )
    logger.info(
        f"ANLS {m}x{n}x{k} seed {seed}: iter={outer} niter={inner} pgn={pgn:.4g} error={report.error:.4g}"
    )
    return W, H, report


def nmf_benchmark(
        m: int,
        n: int,
        k: int,
        seeds: Iterable[int],
        config: Optional[NmfConfig] = None,
        V: Optional[np.ndarray] = None,
        logger: Optional[logging.Logger] = None,
) -> list[NmfRun]:
    """
    One ANLS run per seed on random uniform data (or on the given V).

    :param m: Rows of the random data matrix
    :param n: Columns of the random data matrix
    :param k: Rank
    :param seeds: Seeds of data and starting factors
    :param config: ANLS settings
    :param V: Fixed data matrix; only the starting factors vary with the seed
    :param logger: Logger class
    :return: Runs
    """
    if config is None:
        config = NmfConfig()
    runs = []
    for seed in seeds:
        data = random_matrix(m, n, seed) if V is None else V
        _, _, report = anls(data, k, seed=seed, config=config, logger=logger)
        runs.append(NmfRun(data.shape[0], data.shape[1], k, seed, report, config.solver.eta_scheme.value))
    return runs


def write_nmf_csv(runs: Iterable[NmfRun], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(NMF_COLUMNS)
        for run in runs:
            r = run.report
            writer.writerow([
                run.m, run.n, run.k, run.seed, r.iterations, r.inner_iterations,
                f"{r.pgn:.6g}", f"{r.elapsed:.6f}", f"{r.error:.6g}", run.algorithm,
            ])


def load_matrix_csv(path: str | Path) -> np.ndarray:
    """
    Read a comma separated numeric matrix.
    """
    return np.atleast_2d(np.loadtxt(path, delimiter=",", dtype=float))
