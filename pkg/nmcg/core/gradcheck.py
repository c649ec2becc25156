# -*- coding: utf-8 -*-

"""
Central-difference gradient verification
"""

import math

import numpy as np

from ..errors import EvaluationError
from .problem import DifferentiableProblem, Vector


def default_step(x: Vector) -> float:
    """
    Difference step scaled by the iterate magnitude.

    :param x: Point
    :return: 1e-6 * max(1, ||x||_inf)
    """
    return 1e-6 * max(1.0, float(np.max(np.abs(x))) if np.size(x) else 1.0)


def check_gradient(problem: DifferentiableProblem, x: Vector, h: float | None = None) -> float:
    """
    Compare the analytic gradient with central differences.

    :param problem: Problem to check
    :param x: Point of evaluation
    :param h: Difference step (scaled default when omitted)
    :return: max_i |cd_i - g_i| / max(1, |g_i|)
    """
    x = np.array(x, dtype=float).reshape(-1)
    if h is None:
        h = default_step(x)
    if not h > 0:
        raise ValueError(f"Difference step must be positive, got {h}")
    if not np.all(np.isfinite(x)):
        raise ValueError("Gradient check point must be finite")

    g = np.asarray(problem.gradient(x), dtype=float)
    bad = np.flatnonzero(~np.isfinite(g))
    if bad.size:
        raise EvaluationError(f"Non-finite gradient at coordinate {bad[0]}", coordinate=int(bad[0]))

    worst = 0.0
    probe = x.copy()
    for i in range(x.size):
        probe[i] = x[i] + h
        f_plus = float(problem.value(probe))
        probe[i] = x[i] - h
        f_minus = float(problem.value(probe))
        probe[i] = x[i]
        if not (math.isfinite(f_plus) and math.isfinite(f_minus)):
            raise EvaluationError(f"Non-finite value around coordinate {i}", coordinate=i)
        difference = (f_plus - f_minus) / (2.0 * h)
        worst = max(worst, abs(difference - g[i]) / max(1.0, abs(g[i])))
    return worst
