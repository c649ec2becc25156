# -*- coding: utf-8 -*-

"""
Differentiable problem abstraction and per-run evaluation counting
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ..errors import DimensionError


Vector = np.ndarray
ValueFunction = Callable[[Vector], float]
GradientFunction = Callable[[Vector], Vector]


@dataclass(frozen=True, slots=True)
class DifferentiableProblem:
    """
    Smooth objective f: R^n -> R with its analytic gradient.

    Instances are immutable and hold no evaluation state, so one problem
    can be evaluated from several benchmark workers at once.
    """

    name: str
    dimension: int
    value: ValueFunction
    gradient: GradientFunction
    initial_point: Vector
    known_optimum: Optional[float] = None
    lipschitz: Optional[float] = None  # gradient Lipschitz constant, when known

    def __post_init__(self):
        if self.dimension < 1:
            raise DimensionError(f"Problem \"{self.name}\": dimension must be positive, got {self.dimension}")
        x0 = np.array(self.initial_point, dtype=float).reshape(-1)
        if x0.shape != (self.dimension,):
            raise DimensionError(
                f"Problem \"{self.name}\": initial point has {x0.size} entries, expected {self.dimension}"
            )
        x0.setflags(write=False)
        object.__setattr__(self, "initial_point", x0)


@dataclass(slots=True)
class EvalCounters:
    function_evals: int = 0
    gradient_evals: int = 0


@dataclass(slots=True)
class Evaluator:
    """
    Counting front-end of a problem, owned by a single solver run.
    """

    problem: DifferentiableProblem
    counters: EvalCounters = field(default_factory=EvalCounters)

    def value(self, x: Vector) -> float:
        self.counters.function_evals += 1
        return float(self.problem.value(x))

    def gradient(self, x: Vector) -> Vector:
        self.counters.gradient_evals += 1
        g = np.asarray(self.problem.gradient(x), dtype=float)
        if g.shape != (self.problem.dimension,):
            raise DimensionError(
                f"Problem \"{self.problem.name}\": gradient has shape {g.shape}, expected ({self.problem.dimension},)"
            )
        return g
