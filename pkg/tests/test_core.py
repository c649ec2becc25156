# -*- coding: utf-8 -*-

import math

import numpy as np
import pytest

from nmcg import console_logger
from nmcg.core import DifferentiableProblem, Evaluator, check_gradient, default_step
from nmcg.errors import DimensionError, EvaluationError, NmcgError
from nmcg.problems import make_problem


def _problem(value, gradient, x0):
    x0 = np.asarray(x0, dtype=float)
    return DifferentiableProblem(name="probe", dimension=x0.size, value=value, gradient=gradient, initial_point=x0)


def test_check_gradient_square():
    problem = _problem(lambda x: float(x[0] ** 2), lambda x: 2.0 * x, [0.0])
    assert check_gradient(problem, np.array([3.0])) <= 1e-8


def test_check_gradient_constant():
    problem = _problem(lambda x: 7.0, lambda x: np.zeros_like(x), [0.0, 0.0])
    assert check_gradient(problem, np.array([1.5, -2.0])) <= 1e-10


def test_check_gradient_rosenbrock_at_solution():
    problem = make_problem("extended_rosenbrock", 10)
    assert check_gradient(problem, np.ones(10)) <= 1e-6


def test_check_gradient_detects_wrong_gradient():
    problem = _problem(lambda x: float(x @ x), lambda x: x, [1.0, 1.0])
    assert check_gradient(problem, np.array([1.0, 2.0])) > 0.1


def test_check_gradient_reports_coordinate():
    problem = _problem(
        lambda x: math.inf if x[1] > 1.0 else float(x @ x),
        lambda x: 2.0 * x,
        [0.0, 1.0],
    )
    with pytest.raises(EvaluationError) as e:
        check_gradient(problem, np.array([0.0, 1.0]), h=1e-3)
    assert e.value.coordinate == 1
    assert isinstance(e.value, NmcgError)


def test_check_gradient_non_finite_gradient():
    problem = _problem(lambda x: 0.0, lambda x: np.array([0.0, np.nan, 0.0]), [0.0, 0.0, 0.0])
    with pytest.raises(EvaluationError) as e:
        check_gradient(problem, np.zeros(3))
    assert e.value.coordinate == 1


@pytest.mark.parametrize("h", [0.0, -1e-6])
def test_check_gradient_rejects_step(h):
    problem = _problem(lambda x: 0.0, lambda x: np.zeros_like(x), [0.0])
    with pytest.raises(ValueError):
        check_gradient(problem, np.zeros(1), h=h)


def test_default_step_scales_with_iterate():
    assert default_step(np.array([0.1, -0.2])) == pytest.approx(1e-6)
    assert default_step(np.array([1.0, -300.0])) == pytest.approx(3e-4)


def test_problem_validates_dimension():
    with pytest.raises(DimensionError):
        _problem(lambda x: 0.0, lambda x: x, np.zeros((0,)))
    with pytest.raises(DimensionError):
        DifferentiableProblem(
            name="bad", dimension=3, value=lambda x: 0.0, gradient=lambda x: x, initial_point=np.zeros(2),
        )


def test_initial_point_is_read_only():
    problem = make_problem("fig1_demo", 5)
    with pytest.raises(ValueError):
        problem.initial_point[0] = 1.0


def test_evaluator_counts():
    evaluator = Evaluator(make_problem("fig1_demo", 3))
    x = np.zeros(3)
    for _ in range(3):
        evaluator.value(x)
    evaluator.gradient(x)
    assert evaluator.counters.function_evals == 3
    assert evaluator.counters.gradient_evals == 1


def test_evaluator_checks_gradient_shape():
    evaluator = Evaluator(_problem(lambda x: 0.0, lambda x: np.zeros(5), [0.0, 0.0]))
    with pytest.raises(DimensionError):
        evaluator.gradient(np.zeros(2))


def test_console_logger_single_handler():
    first = console_logger("nmcg.test", "debug")
    second = console_logger("nmcg.test", "WARNING")
    assert first is second
    assert len(second.handlers) == 1
    assert second.level == 30
