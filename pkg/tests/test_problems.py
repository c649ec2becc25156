# -*- coding: utf-8 -*-

import numpy as np
import pytest

from nmcg.core import check_gradient
from nmcg.errors import DimensionError, UnknownProblem
from nmcg.problems import (
    CANONICAL_DIMENSIONS,
    PROBLEMS,
    format_optimum,
    list_problems,
    make_problem,
    problem_spec,
    suite_instances,
)
from nmcg.solver import minimize


# a minimizer of each family at n = 4
MINIMIZERS = {
    "fig1_demo": [5.0, 1.0, 1.0, 1.0],
    "extended_rosenbrock": [1.0, 1.0, 1.0, 1.0],
    "extended_white_holst": [1.0, 1.0, 1.0, 1.0],
    "extended_beale": [3.0, 0.5, 3.0, 0.5],
    "raydan1": [0.0, 0.0, 0.0, 0.0],
    "diagonal1": list(np.log([1.0, 2.0, 3.0, 4.0])),
    "extended_tridiagonal1": [1.0, 2.0, 1.0, 2.0],
    "generalized_quadratic": [0.0, 0.0, 0.0, 0.0],
    "perturbed_quadratic": [0.0, 0.0, 0.0, 0.0],
    "extended_himmelblau": [3.0, 2.0, 3.0, 2.0],
    "fletchcr": [1.0, 1.0, 1.0, 1.0],
    "quadratic_qf1": [0.0, 0.0, 0.0, 0.25],
}


def test_registry_has_twelve_families():
    assert set(PROBLEMS) == set(MINIMIZERS)
    assert len(list_problems()) == 12


@pytest.mark.parametrize("name", sorted(MINIMIZERS))
def test_gradient_matches_central_differences(name, rng):
    problem = make_problem(name, 4)
    for _ in range(5):
        assert check_gradient(problem, rng.uniform(-2.0, 2.0, 4)) <= 1e-5
    assert check_gradient(problem, problem.initial_point) <= 1e-5


@pytest.mark.parametrize("name", sorted(MINIMIZERS))
def test_known_minimizer(name):
    problem = make_problem(name, 4)
    x = np.array(MINIMIZERS[name])
    assert problem.value(x) == pytest.approx(problem.known_optimum, abs=1e-12)
    np.testing.assert_allclose(problem.gradient(x), 0.0, atol=1e-12)


@pytest.mark.parametrize("name", sorted(MINIMIZERS))
def test_large_dimension(name):
    problem = make_problem(name, 100000)
    g = problem.gradient(problem.initial_point)
    assert g.shape == (100000,)
    assert np.all(np.isfinite(g))


@pytest.mark.parametrize("name", sorted(MINIMIZERS))
def test_solver_reaches_known_optimum(name):
    problem = make_problem(name, 10)
    report = minimize(problem)
    assert report.converged
    optimum = problem.known_optimum
    assert abs(report.final_value - optimum) <= 1e-8 * max(1.0, abs(optimum))


def test_fig1_demo_values():
    problem = make_problem("fig1_demo")
    assert problem.dimension == 41
    assert problem.value(np.zeros(41)) == 65.0
    center = np.ones(41)
    center[0] = 5.0
    assert problem.value(center) == 0.0


def test_rosenbrock_at_ones():
    problem = make_problem("extended_rosenbrock", 1000)
    assert problem.value(np.ones(1000)) == 0.0
    np.testing.assert_array_equal(problem.gradient(np.ones(1000)), 0.0)


def test_perturbed_quadratic_against_loop(rng):
    problem = make_problem("perturbed_quadratic", 10)
    for x in (np.zeros(10), rng.normal(size=10)):
        expected = 0.0
        total = 0.0
        for i in range(10):
            expected += (i + 1) * x[i] ** 2
            total += x[i]
        expected += total ** 2 / 100.0
        assert problem.value(x) == pytest.approx(expected, rel=1e-12, abs=1e-15)


def test_unknown_problem():
    with pytest.raises(UnknownProblem) as e:
        make_problem("rosenbrock_typo", 10)
    assert isinstance(e.value, KeyError)
    assert "rosenbrock_typo" in str(e.value)


@pytest.mark.parametrize("name, n", [
    ("extended_rosenbrock", 3),
    ("extended_himmelblau", 101),
    ("fletchcr", 1),
    ("raydan1", 0),
])
def test_invalid_dimension(name, n):
    with pytest.raises(DimensionError):
        make_problem(name, n)


def test_suite_instances():
    instances = suite_instances()
    assert len(instances) == 36
    assert {n for _, n in instances} == set(CANONICAL_DIMENSIONS)
    assert suite_instances(["raydan1"], (n for n in (10, 20))) == [("raydan1", 10), ("raydan1", 20)]
    with pytest.raises(UnknownProblem):
        suite_instances(["nope"])


def test_format_optimum():
    assert format_optimum(problem_spec("quadratic_qf1"), 100) == "-0.005"
    assert format_optimum(problem_spec("raydan1"), 10) == "5.5"
