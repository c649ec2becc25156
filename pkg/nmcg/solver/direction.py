# -*- coding: utf-8 -*-

"""
Adaptive omega, the bounded conjugate gradient parameter and the search direction
"""

from __future__ import annotations

from typing import Optional, Protocol

import numpy as np

from ..errors import DegenerateDirection, InvariantViolation


OMEGA_LOWER = 0.001
OMEGA_UPPER = 0.999
RESTART_TOLERANCE = 1e-12


class BetaRule(Protocol):
    """
    Conjugate gradient parameter seam: beta_k from g_k, g_{k-1}, d_{k-1} and omega_k.
    """

    def __call__(self, g: np.ndarray, g_prev: np.ndarray, d_prev: np.ndarray, omega: float) -> float:
        ...


def omega_adaptive(g: np.ndarray, g_prev: np.ndarray, d_prev: np.ndarray) -> float:
    """
    Piecewise omega_k from t = |g_k' d_{k-1}| / (-g_{k-1}' d_{k-1}).

    :param g: Current gradient
    :param g_prev: Previous gradient
    :param d_prev: Previous direction
    :return: 0.001 if t <= 0, 0.999 if t >= 1, t otherwise
    """
    denominator = -float(g_prev @ d_prev)
    if not denominator > 0:
        raise InvariantViolation(f"Previous direction is not a descent direction (g'd = {-denominator:.3e})")
    t = abs(float(g @ d_prev)) / denominator
    if t <= 0:
        return OMEGA_LOWER
    if t >= 1:
        return OMEGA_UPPER
    return t


def beta_new(g: np.ndarray, d_prev: np.ndarray, omega: float) -> float:
    """
    beta_k = omega ||g_k|| / ||d_{k-1}||.
    """
    d_norm = float(np.linalg.norm(d_prev))
    if d_norm == 0:
        raise DegenerateDirection("Previous search direction vanished")
    return omega * float(np.linalg.norm(g)) / d_norm


def bounded_beta(g: np.ndarray, g_prev: np.ndarray, d_prev: np.ndarray, omega: float) -> float:
    """
    Default BetaRule around beta_new.
    """
    return beta_new(g, d_prev, omega)


def direction(g: np.ndarray, d_prev: Optional[np.ndarray], beta: float) -> np.ndarray:
    """
    d_0 = -g_0, d_k = -g_k + beta_{k-1} d_{k-1}.
    """
    if d_prev is None:
        return -g
    return -g + beta * d_prev


def ensure_descent(g: np.ndarray, d: np.ndarray) -> tuple[np.ndarray, bool]:
    """
    Restart with steepest descent when d is not numerically a descent direction.

    :param g: Gradient
    :param d: Candidate direction
    :return: Direction and restart flag
    """
    g_squared = float(g @ g)
    if float(g @ d) > -RESTART_TOLERANCE * g_squared:
        return -g, g_squared > 0
    return d, False
