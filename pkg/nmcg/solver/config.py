# -*- coding: utf-8 -*-

"""
Solver configuration
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Mapping, Optional

from typing_extensions import Self

from .nonmonotone import EtaScheme
from .stepsize import ALPHA_MAX, ALPHA_MIN


ADAPTIVE = "adaptive"


def parse_omega(value: Optional[str | float]) -> Optional[float]:
    """
    "adaptive" (or empty) -> None, anything else -> fixed omega.
    """
    if value is None:
        return None
    if isinstance(value, str):
        if value.strip().lower() in ("", ADAPTIVE):
            return None
        return float(value)
    return float(value)


@dataclass(slots=True)
class SolverConfig:
    """
    Tunables of the non-monotone conjugate gradient method.
    """

    gamma: float = 1e-4
    rho: float = 0.75
    N: int = 5
    c: float = 1e-4  # sufficient descent constant, only checked by tests
    epsilon: float = 1e-6
    max_iter: int = 20000
    eta_scheme: EtaScheme = EtaScheme.trig
    omega: Optional[float] = None  # None -> adaptive omega_k
    alpha_min: float = ALPHA_MIN
    alpha_max: float = ALPHA_MAX
    backtrack_cap: int = 60

    def __post_init__(self):
        self.eta_scheme = EtaScheme(self.eta_scheme)
        if not 0 < self.gamma < 1:
            raise ValueError(f"gamma must lie in (0, 1), got {self.gamma}")
        if not 0 < self.rho < 1:
            raise ValueError(f"rho must lie in (0, 1), got {self.rho}")
        if self.N < 0:
            raise ValueError(f"N must be nonnegative, got {self.N}")
        if not self.c > 0:
            raise ValueError(f"c must be positive, got {self.c}")
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be positive, got {self.max_iter}")
        if self.omega is not None and not 0 < self.omega < 1:
            raise ValueError(f"omega must lie in (0, 1), got {self.omega}")
        if not 0 < self.alpha_min <= self.alpha_max:
            raise ValueError(f"Need 0 < alpha_min <= alpha_max, got {self.alpha_min}, {self.alpha_max}")
        if self.backtrack_cap < 1:
            raise ValueError(f"backtrack_cap must be positive, got {self.backtrack_cap}")

    @property
    def adaptive_omega(self) -> bool:
        return self.omega is None

    def replace(self, **changes) -> Self:
        return dataclasses.replace(self, **changes)

    @classmethod
    def from_env(cls, values: Mapping[str, Optional[str]]) -> Self:
        """
        Build a configuration from a dotenv mapping (NMCG_* keys).

        :param values: Mapping as returned by dotenv.dotenv_values
        :return: Configuration, defaults for missing keys
        """
        fields = dict(
            gamma=("NMCG_GAMMA", float),
            rho=("NMCG_RHO", float),
            N=("NMCG_N", int),
            c=("NMCG_C", float),
            epsilon=("NMCG_EPSILON", float),
            max_iter=("NMCG_MAX_ITER", int),
            eta_scheme=("NMCG_ETA_SCHEME", EtaScheme),
            omega=("NMCG_OMEGA", parse_omega),
            alpha_min=("NMCG_ALPHA_MIN", float),
            alpha_max=("NMCG_ALPHA_MAX", float),
            backtrack_cap=("NMCG_BACKTRACK_CAP", int),
        )
        kwargs = {}
        for name, (key, convert) in fields.items():
            raw = values.get(key)
            if raw is not None and raw != "":
                kwargs[name] = convert(raw)
        return cls(**kwargs)
