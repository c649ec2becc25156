# -*- coding: utf-8 -*-

"""
Performance ratios and performance profiles
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np


class Metric(enum.Enum):
    iterations = "iterations"
    function_evals = "function_evals"
    gradient_evals = "gradient_evals"
    time = "time"

    @classmethod
    def values(cls) -> set:
        return set(map(lambda c: c.value, cls))

    @property
    def floor(self) -> float:
        """
        Smallest value used in a ratio; a zero count is one unit of work.
        """
        return 1e-9 if self is Metric.time else 1.0


@dataclass(slots=True)
class ProfileTable:
    """
    Metric a[k][s] of solver s on problem k, with the failure mask.
    """

    metric: Metric
    problems: list[str]
    solvers: list[str]
    values: np.ndarray
    failed: np.ndarray

    def __post_init__(self):
        self.metric = Metric(self.metric)
        self.values = np.asarray(self.values, dtype=float)
        self.failed = np.asarray(self.failed, dtype=bool)
        shape = (len(self.problems), len(self.solvers))
        if self.values.shape != shape or self.failed.shape != shape:
            raise ValueError(f"Table shape must be {shape}, got {self.values.shape} and {self.failed.shape}")
        solved = self.values[~self.failed]
        if not np.all(np.isfinite(solved)) or np.any(solved < 0):
            raise ValueError("Metric values of solved runs must be finite and nonnegative")


def performance_ratios(table: ProfileTable, logger: Optional[logging.Logger] = None) -> np.ndarray:
    """
    r[k][s] = a[k][s] / min_s' a[k][s'] over solved entries, +inf for failures.

    Rows where every solver failed are dropped.

    :param table: Metric table
    :param logger: Logger class
    :return: Ratio matrix of the kept rows
    """
    if logger is None:
        logger = logging.getLogger(__name__)
    values = np.maximum(table.values, table.metric.floor)
    values = np.where(table.failed, np.inf, values)
    keep = ~np.all(table.failed, axis=1)
    for index in np.flatnonzero(~keep):
        logger.warning(f"Every solver failed on \"{table.problems[index]}\"; problem left out of the profile")
    values = values[keep]
    if values.size == 0:
        return values.reshape(0, len(table.solvers))
    return values / np.min(values, axis=1, keepdims=True)


def profile(ratios: np.ndarray, tau_grid: Sequence[float]) -> np.ndarray:
    """
    p[s][j] = share of problems with r[k][s] <= tau_j.

    :param ratios: Ratio matrix (problems x solvers)
    :param tau_grid: Increasing grid starting at or above 1
    :return: Profile matrix (solvers x grid points)
    """
    ratios = np.asarray(ratios, dtype=float)
    tau = np.asarray(tau_grid, dtype=float).reshape(-1)
    if tau.size == 0 or tau[0] < 1 or np.any(np.diff(tau) < 0):
        raise ValueError("tau grid must be sorted and start at or above 1")
    if ratios.shape[0] == 0:
        return np.zeros((ratios.shape[1], tau.size))
    return (ratios[:, :, None] <= tau[None, None, :]).mean(axis=0)


def exact_tau_grid(ratios: np.ndarray) -> np.ndarray:
    """
    Distinct finite ratio values, the breakpoints of every profile.
    """
    ratios = np.asarray(ratios, dtype=float)
    finite = ratios[np.isfinite(ratios)]
    return np.unique(np.concatenate([[1.0], finite]))


def uniform_tau_grid(upper: float = 10.0, points: int = 91) -> np.ndarray:
    return np.linspace(1.0, upper, points)


def export_tau_grid(ratios: np.ndarray, upper: float = 10.0, points: int = 91) -> np.ndarray:
    """
    Exact breakpoints merged with the uniform plotting grid.
    """
    return np.unique(np.concatenate([exact_tau_grid(ratios), uniform_tau_grid(upper, points)]))
