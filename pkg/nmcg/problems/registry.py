# -*- coding: utf-8 -*-

"""
Problem registry
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import numpy as np

from ..core import DifferentiableProblem
from ..errors import DimensionError, UnknownProblem
from . import families


CANONICAL_DIMENSIONS = (100, 1000, 10000)


@dataclass(frozen=True, slots=True)
class ProblemSpec:
    """
    Registry entry: constructor, dimension rule and what is known about the minimum.
    """

    name: str
    builder: Callable[[int], tuple]
    formula: str
    min_dimension: int = 1
    paired: bool = False
    optimum: Optional[Callable[[int], float]] = None
    lipschitz: Optional[Callable[[int], float]] = None
    default_dimension: int = 100

    @property
    def valid_dimensions(self) -> str:
        if self.paired:
            return f"even n >= {self.min_dimension}"
        return f"n >= {self.min_dimension}"

    def validate(self, n: int) -> None:
        if n < self.min_dimension:
            raise DimensionError(f"Problem \"{self.name}\" needs {self.valid_dimensions}, got n={n}")
        if self.paired and n % 2:
            raise DimensionError(f"Problem \"{self.name}\" needs {self.valid_dimensions}, got odd n={n}")

    def build(self, n: int) -> DifferentiableProblem:
        self.validate(n)
        value, gradient, x0 = self.builder(n)
        return DifferentiableProblem(
            name=self.name,
            dimension=n,
            value=value,
            gradient=gradient,
            initial_point=x0,
            known_optimum=self.optimum(n) if self.optimum is not None else None,
            lipschitz=self.lipschitz(n) if self.lipschitz is not None else None,
        )


def _zero(n: int) -> float:
    return 0.0


def _diagonal1_optimum(n: int) -> float:
    i = np.arange(1, n + 1, dtype=float)
    return float(np.sum(i - i * np.log(i)))


PROBLEMS: dict[str, ProblemSpec] = {
    spec.name: spec for spec in (
        ProblemSpec(
            "fig1_demo", families.fig1_demo,
            "(x_0 - 5)^2 + sum_{i>=1} (x_i - 1)^2",
            optimum=_zero, lipschitz=lambda n: 2.0, default_dimension=41,
        ),
        ProblemSpec(
            "extended_rosenbrock", families.extended_rosenbrock,
            "sum 100 (x_{2i} - x_{2i-1}^2)^2 + (1 - x_{2i-1})^2",
            min_dimension=2, paired=True, optimum=_zero,
        ),
        ProblemSpec(
            "extended_white_holst", families.extended_white_holst,
            "sum 100 (x_{2i} - x_{2i-1}^3)^2 + (1 - x_{2i-1})^2",
            min_dimension=2, paired=True, optimum=_zero,
        ),
        ProblemSpec(
            "extended_beale", families.extended_beale,
            "sum (1.5 - a(1-b))^2 + (2.25 - a(1-b^2))^2 + (2.625 - a(1-b^3))^2",
            min_dimension=2, paired=True, optimum=_zero,
        ),
        ProblemSpec(
            "raydan1", families.raydan1,
            "sum (i/10) (exp(x_i) - x_i)",
            optimum=lambda n: n * (n + 1) / 20.0,
        ),
        ProblemSpec(
            "diagonal1", families.diagonal1,
            "sum exp(x_i) - i x_i",
            optimum=_diagonal1_optimum,
        ),
        ProblemSpec(
            "extended_tridiagonal1", families.extended_tridiagonal1,
            "sum (x_{2i-1} + x_{2i} - 3)^2 + (x_{2i-1} - x_{2i} + 1)^4",
            min_dimension=2, paired=True, optimum=_zero,
        ),
        ProblemSpec(
            "generalized_quadratic", families.generalized_quadratic,
            "sum_{i<n} x_i^2 + (x_{i+1} + x_i^2)^2",
            min_dimension=2, optimum=_zero,
        ),
        ProblemSpec(
            "perturbed_quadratic", families.perturbed_quadratic,
            "sum i x_i^2 + (sum x_i)^2 / 100",
            optimum=_zero,
        ),
        ProblemSpec(
            "extended_himmelblau", families.extended_himmelblau,
            "sum (x_{2i-1}^2 + x_{2i} - 11)^2 + (x_{2i-1} + x_{2i}^2 - 7)^2",
            min_dimension=2, paired=True, optimum=_zero,
        ),
        ProblemSpec(
            "fletchcr", families.fletchcr,
            "sum_{i<n} 100 (x_{i+1} - x_i + 1 - x_i^2)^2",
            min_dimension=2, optimum=_zero,
        ),
        ProblemSpec(
            "quadratic_qf1", families.quadratic_qf1,
            "0.5 sum i x_i^2 - x_n",
            optimum=lambda n: -0.5 / n, lipschitz=lambda n: float(n),
        ),
    )
}


def problem_spec(name: str) -> ProblemSpec:
    try:
        return PROBLEMS[name]
    except KeyError:
        raise UnknownProblem(f"Unknown problem \"{name}\" (known: {', '.join(sorted(PROBLEMS))})")


def make_problem(name: str, n: Optional[int] = None) -> DifferentiableProblem:
    """
    Build a registered problem with its canonical start point.

    :param name: Family name
    :param n: Dimension (the family default when omitted)
    :return: Problem instance
    """
    spec = problem_spec(name)
    return spec.build(spec.default_dimension if n is None else int(n))


def list_problems() -> list[ProblemSpec]:
    return list(PROBLEMS.values())


def suite_instances(
        names: Optional[Iterable[str]] = None,
        dimensions: Iterable[int] = CANONICAL_DIMENSIONS,
) -> list[tuple[str, int]]:
    """
    (family, n) pairs of a benchmark suite, every family at every dimension.
    """
    names = list(PROBLEMS) if names is None else list(names)
    dimensions = tuple(dimensions)
    for name in names:
        problem_spec(name)
    return [(name, int(n)) for name in names for n in dimensions]


def format_optimum(spec: ProblemSpec, n: int) -> str:
    if spec.optimum is None:
        return "unknown"
    return f"{spec.optimum(n):.10g}"
