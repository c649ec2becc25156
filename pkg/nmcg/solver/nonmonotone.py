# -*- coding: utf-8 -*-

"""
Non-monotone parameter schemes and the sliding window of objective values
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np
from typing_extensions import Self


AHOOKHOSH_ETA0 = 0.15
AMINI_ETA0 = 0.95


def eta_trig(gradient_norm: float) -> float:
    """
    Trigonometric non-monotone parameter.

    Large gradients give a strongly non-monotone search (close to 0.96), small
    gradients near a solution make it almost monotone (close to 0.01).

    :param gradient_norm: Euclidean norm of the gradient
    :return: 0.95 * sin(pi * |g| / (1 + 2|g|)) + 0.01
    """
    if not gradient_norm > 0:
        return 0.01
    # pi |g| / (1 + 2|g|) without forming 2|g|
    return 0.95 * math.sin(math.pi / (2.0 + 1.0 / gradient_norm)) + 0.01


def eta_ahookhosh(k: int, eta0: float = AHOOKHOSH_ETA0) -> float:
    """
    Geometric scheme: (1/3) eta0 (-1/2)^k + (2/3) eta0, tends to 2/3 eta0.
    """
    return eta0 * (-0.5) ** k / 3.0 + 2.0 * eta0 / 3.0


def eta_amini(eta_prev: float, gradient_inf_norm: float) -> float:
    """
    Gradient-driven scheme: shrink fast near a solution, otherwise decay to 0.5.

    :param eta_prev: Previous parameter value
    :param gradient_inf_norm: Max-norm of the current gradient
    :return: Next parameter value
    """
    if gradient_inf_norm <= 1e-3:
        return 2.0 * eta_prev / 3.0 + 0.01
    return max(0.99 * eta_prev, 0.5)


class EtaScheme(enum.Enum):
    trig = "trig"
    ahookhosh = "ahookhosh"
    amini = "amini"

    @classmethod
    def values(cls) -> set:
        return set(map(lambda c: c.value, cls))

    def initial(self, g: np.ndarray) -> float:
        """
        eta_0 for a run starting with gradient g.
        """
        match self:
            case EtaScheme.trig:
                return eta_trig(float(np.linalg.norm(g)))
            case EtaScheme.ahookhosh:
                return eta_ahookhosh(0)
            case EtaScheme.amini:
                return AMINI_ETA0

    def following(self, k: int, eta_prev: float, g: np.ndarray) -> float:
        """
        eta_k computed from the gradient g = g_k once x_k is accepted.
        """
        match self:
            case EtaScheme.trig:
                return eta_trig(float(np.linalg.norm(g)))
            case EtaScheme.ahookhosh:
                return eta_ahookhosh(k)
            case EtaScheme.amini:
                return eta_amini(eta_prev, float(np.linalg.norm(g, ord=np.inf)) if g.size else 0.0)


@dataclass(slots=True)
class NonmonotoneMemory:
    """
    The last N+1 objective values, the extent m_k and the maximum f_{l_k}.
    """

    N: int
    window: deque = field(default_factory=deque)
    m: int = 0
    f_lk: float = math.nan
    eta: float = 0.0

    def __post_init__(self):
        if self.N < 0:
            raise ValueError(f"Memory cap N must be nonnegative, got {self.N}")
        self.window = deque(self.window, maxlen=self.N + 1)
        if self.window:
            self.m = min(self.m, len(self.window) - 1, self.N)
            self.f_lk = max(list(self.window)[-(self.m + 1):])

    @classmethod
    def start(cls, f0: float, N: int, eta: float = 0.0) -> Self:
        """
        Memory at k = 0: m_0 = 0 and f_{l_0} = f_0.
        """
        return cls(N=N, window=deque([f0]), m=0, eta=eta)

    def push(self, f_new: float) -> Self:
        self.window.append(f_new)
        self.m = min(self.m + 1, self.N)
        self.f_lk = max(list(self.window)[-(self.m + 1):])
        return self


def update_memory(memory: NonmonotoneMemory, f_new: float) -> NonmonotoneMemory:
    """
    Append f_new, set m <- min(m + 1, N) and refresh the window maximum.

    :param memory: Memory of the current run
    :param f_new: Newly accepted objective value
    :return: The updated memory
    """
    return memory.push(f_new)


def reference_value(memory: NonmonotoneMemory, f_k: float) -> float:
    """
    R_k = eta_k f_{l_k} + (1 - eta_k) f_k, kept inside [f_k, f_{l_k}].
    """
    r = memory.eta * memory.f_lk + (1.0 - memory.eta) * f_k
    return min(max(r, f_k), memory.f_lk)
