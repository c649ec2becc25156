# -*- coding: utf-8 -*-

"""
Shared helpers for solver tests
"""

import math
from dataclasses import replace

import numpy as np

from nmcg.core import DifferentiableProblem
from nmcg.solver import SolverConfig, SolverReport


class CallCounter:
    def __init__(self):
        self.values = 0
        self.gradients = 0


def counted(problem: DifferentiableProblem) -> tuple[DifferentiableProblem, CallCounter]:
    """
    Same problem, every value and gradient call counted.
    """
    calls = CallCounter()

    def value(x):
        calls.values += 1
        return problem.value(x)

    def gradient(x):
        calls.gradients += 1
        return problem.gradient(x)

    return replace(problem, value=value, gradient=gradient), calls


def half_square() -> DifferentiableProblem:
    return DifferentiableProblem(
        name="half_square", dimension=1,
        value=lambda x: 0.5 * float(x[0] ** 2), gradient=lambda x: np.array(x, dtype=float),
        initial_point=np.array([10.0]), known_optimum=0.0, lipschitz=1.0,
    )


def check_trace_invariants(report: SolverReport, cfg: SolverConfig, lipschitz: float | None = None) -> None:
    """
    Envelope, level set, sufficient descent, direction bound and step bound over a run trace.
    """
    trace = report.trace
    assert trace is not None
    f0 = trace[0].f if trace else report.final_value
    for i, r in enumerate(trace):
        scale = max(1.0, abs(r.flk))
        assert r.f <= r.Rk + 1e-12 * scale
        assert r.Rk <= r.flk + 1e-12 * scale
        assert r.f <= f0 + 1e-12 * max(1.0, abs(f0))
        assert r.f_next <= r.Rk + 1e-12 * scale
        assert r.gtd <= -(1.0 - r.omega) * r.gnorm ** 2 + 1e-12 * r.gnorm ** 2
        assert r.dnorm <= (1.0 + r.omega) * r.gnorm * (1.0 + 1e-10)
        assert r.beta >= 0
        assert r.Rk - r.f_next >= cfg.gamma * r.alpha * (1.0 - r.omega) * r.gnorm ** 2 - 1e-10 * max(1.0, abs(r.Rk))
        if i:
            assert r.flk <= trace[i - 1].flk + 1e-12 * scale
        if lipschitz is not None:
            bound = 2.0 * (1.0 - r.omega) * cfg.rho * (1.0 - cfg.gamma) / (lipschitz * (1.0 + r.omega) ** 2)
            assert r.alpha >= min(r.alpha0 * cfg.rho, bound) - 1e-12
    assert math.isfinite(report.final_value)
