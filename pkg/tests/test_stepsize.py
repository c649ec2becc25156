# -*- coding: utf-8 -*-

import numpy as np
import pytest

from nmcg.solver import StepPair, cbb_step, initial_step


def _pair(s, y):
    return StepPair(np.asarray(s, dtype=float), np.asarray(y, dtype=float))


def test_cbb_example():
    assert cbb_step(_pair([1.0, 1.0], [1.0, 2.0])) == pytest.approx(68.0 / 105.0, abs=1e-12)


def test_cbb_exact_secant():
    assert cbb_step(_pair([1.0, 2.0, -1.0], [1.0, 2.0, -1.0])) == pytest.approx(1.0)


def test_cbb_scaled_identity():
    s = np.array([0.3, -1.0, 2.0])
    assert cbb_step(_pair(s, 4.0 * s)) == pytest.approx(0.25)


def test_cbb_negative_curvature():
    assert cbb_step(_pair([1.0, 0.0], [-2.0, 0.0])) == pytest.approx(0.5)


def test_cbb_zero_gradient_change():
    assert cbb_step(_pair([1.0, 0.0], [0.0, 0.0])) == 1.0


def test_cbb_clamps():
    assert cbb_step(_pair([1.0, 0.0], [-1e-12, 0.0])) == 1e10
    assert cbb_step(_pair([1.0], [1e12]), alpha_min=1e-10) == 1e-10
    assert cbb_step(_pair([1.0, 1.0], [1.0, 1.0]), alpha_min=2.0, alpha_max=3.0) == 2.0


def test_cbb_underflowed_gradient_change():
    assert cbb_step(_pair([1.0], [1e-170])) == 1e10
    assert cbb_step(_pair([1.0], [1e-170]), alpha_max=5.0) == 5.0


def test_cbb_rejects_bounds():
    with pytest.raises(ValueError):
        cbb_step(_pair([1.0], [1.0]), alpha_min=2.0, alpha_max=1.0)


def test_cbb_between_bb_steps(rng):
    for _ in range(200):
        n = int(rng.integers(2, 8))
        a = rng.normal(size=(n, n))
        spd = a @ a.T + 0.1 * np.eye(n)
        s = rng.normal(size=n)
        y = spd @ s
        a1 = float(s @ s) / float(s @ y)
        a2 = float(s @ y) / float(y @ y)
        alpha = cbb_step(_pair(s, y))
        assert min(a1, a2) * (1 - 1e-12) <= alpha <= max(a1, a2) * (1 + 1e-12)


@pytest.mark.parametrize("c", [1e-6, 1.0, 1e6])
def test_cbb_scale_invariance(rng, c):
    a = rng.normal(size=(5, 5))
    spd = a @ a.T + np.eye(5)
    s = rng.normal(size=5)
    y = spd @ s
    assert cbb_step(_pair(c * s, c * y)) == pytest.approx(cbb_step(_pair(s, y)), rel=1e-10)


def test_initial_step():
    assert initial_step(np.array([3.0, 4.0])) == pytest.approx(0.2)
    assert initial_step(np.zeros(3)) == 1.0
    assert initial_step(np.array([1e-20])) == 1e10
