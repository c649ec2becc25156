# -*- coding: utf-8 -*-

"""
Convex-combination Barzilai-Borwein trial step
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


ALPHA_MIN = 1e-10
ALPHA_MAX = 1e10


@dataclass(frozen=True, slots=True)
class StepPair:
    s: np.ndarray  # x_k - x_{k-1}
    y: np.ndarray  # g_k - g_{k-1}


def clamp(alpha: float, alpha_min: float = ALPHA_MIN, alpha_max: float = ALPHA_MAX) -> float:
    return min(max(alpha, alpha_min), alpha_max)


def initial_step(g: np.ndarray, alpha_min: float = ALPHA_MIN, alpha_max: float = ALPHA_MAX) -> float:
    """
    Trial step of the first iteration, 1 / ||g_0|| (1 when g_0 = 0).
    """
    norm = float(np.linalg.norm(g))
    return clamp(1.0 / norm if norm > 0 else 1.0, alpha_min, alpha_max)


def bb_steps(pair: StepPair) -> tuple[float, float]:
    """
    The two Barzilai-Borwein steps s's / s'y and s'y / y'y (requires s'y > 0).

    The second step is inf when y'y underflows to zero.
    """
    sty = float(pair.s @ pair.y)
    yty = float(pair.y @ pair.y)
    return float(pair.s @ pair.s) / sty, sty / yty if yty > 0 else math.inf


def cbb_step(pair: StepPair, alpha_min: float = ALPHA_MIN, alpha_max: float = ALPHA_MAX) -> float:
    """
    Convex combination of the two Barzilai-Borwein steps.

    The weight mu = K2 / (K1 + K2) compares the secant residuals of both steps,
    K1 = ||a1 y - s||^2 and K2 = ||s / a2 - y||^2, so the step whose secant
    equation fits worse receives the smaller weight.

    :param pair: Iterate and gradient differences
    :param alpha_min: Lower clamp
    :param alpha_max: Upper clamp
    :return: Trial step inside [alpha_min, alpha_max]
    """
    if alpha_min > alpha_max:
        raise ValueError(f"alpha_min {alpha_min} exceeds alpha_max {alpha_max}")
    s, y = pair.s, pair.y
    sty = float(s @ y)
    if not sty > 0:
        # negative or zero curvature along s
        y_norm = float(np.linalg.norm(y))
        alpha = float(np.linalg.norm(s)) / y_norm if y_norm > 0 else 1.0
        return clamp(alpha, alpha_min, alpha_max)

    a1, a2 = bb_steps(pair)
    if not (math.isfinite(a1) and math.isfinite(a2)):
        return clamp(a1, alpha_min, alpha_max)
    k1 = float(np.sum((a1 * y - s) ** 2))
    k2 = float(np.sum((s / a2 - y) ** 2))
    total = k1 + k2
    if not (total > 0 and math.isfinite(total)):
        return clamp(a1, alpha_min, alpha_max)
    mu = k2 / total
    return clamp(mu * a1 + (1.0 - mu) * a2, alpha_min, alpha_max)
