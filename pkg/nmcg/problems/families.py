# -*- coding: utf-8 -*-

"""
Test problem families: value, gradient and canonical start point for dimension n

Extended families act on consecutive pairs (x_{2i-1}, x_{2i}) and need even n.
Formulas follow the usual large-scale unconstrained collection conventions.
"""

from __future__ import annotations

import numpy as np

from ..core import Vector


def _frozen(*arrays: np.ndarray) -> None:
    for a in arrays:
        a.setflags(write=False)


def _pairs(x: Vector) -> tuple[Vector, Vector]:
    return x[0::2], x[1::2]


def _interleave(odd: Vector, even: Vector) -> Vector:
    g = np.empty(odd.size + even.size)
    g[0::2] = odd
    g[1::2] = even
    return g


def _alternating(n: int, first: float, second: float) -> Vector:
    x0 = np.full(n, second, dtype=float)
    x0[0::2] = first
    return x0


def fig1_demo(n: int):
    """
    (x_0 - 5)^2 + sum_{i>=1} (x_i - 1)^2, minimum 0 at (5, 1, ..., 1), start at the origin.
    """
    center = np.ones(n)
    center[0] = 5.0
    _frozen(center)

    def value(x: Vector) -> float:
        return float(np.sum((x - center) ** 2))

    def gradient(x: Vector) -> Vector:
        return 2.0 * (x - center)

    return value, gradient, np.zeros(n)


def extended_rosenbrock(n: int):
    """
    sum 100 (x_{2i} - x_{2i-1}^2)^2 + (1 - x_{2i-1})^2, start (-1.2, 1, ...).
    """

    def value(x: Vector) -> float:
        a, b = _pairs(x)
        return float(np.sum(100.0 * (b - a * a) ** 2 + (1.0 - a) ** 2))

    def gradient(x: Vector) -> Vector:
        a, b = _pairs(x)
        t = b - a * a
        return _interleave(-400.0 * t * a - 2.0 * (1.0 - a), 200.0 * t)

    return value, gradient, _alternating(n, -1.2, 1.0)


def extended_white_holst(n: int):
    """
    sum 100 (x_{2i} - x_{2i-1}^3)^2 + (1 - x_{2i-1})^2, start (-1.2, 1, ...).
    """

    def value(x: Vector) -> float:
        a, b = _pairs(x)
        return float(np.sum(100.0 * (b - a ** 3) ** 2 + (1.0 - a) ** 2))

    def gradient(x: Vector) -> Vector:
        a, b = _pairs(x)
        t = b - a ** 3
        return _interleave(-600.0 * t * a * a - 2.0 * (1.0 - a), 200.0 * t)

    return value, gradient, _alternating(n, -1.2, 1.0)


def extended_beale(n: int):
    """
    sum (1.5 - a(1 - b))^2 + (2.25 - a(1 - b^2))^2 + (2.625 - a(1 - b^3))^2
    over pairs (a, b) = (x_{2i-1}, x_{2i}), minimum 0 at (3, 0.5), start (1, 0.8, ...).
    """

    def residuals(x: Vector):
        a, b = _pairs(x)
        return a, b, 1.5 - a * (1.0 - b), 2.25 - a * (1.0 - b * b), 2.625 - a * (1.0 - b ** 3)

    def value(x: Vector) -> float:
        _, _, r1, r2, r3 = residuals(x)
        return float(np.sum(r1 * r1 + r2 * r2 + r3 * r3))

    def gradient(x: Vector) -> Vector:
        a, b, r1, r2, r3 = residuals(x)
        ga = -2.0 * (r1 * (1.0 - b) + r2 * (1.0 - b * b) + r3 * (1.0 - b ** 3))
        gb = 2.0 * a * (r1 + 2.0 * r2 * b + 3.0 * r3 * b * b)
        return _interleave(ga, gb)

    return value, gradient, _alternating(n, 1.0, 0.8)


def raydan1(n: int):
    """
    sum (i / 10)(exp(x_i) - x_i), minimum n(n+1)/20 at the origin, start (1, ..., 1).
    """
    weight = np.arange(1, n + 1) / 10.0
    _frozen(weight)

    def value(x: Vector) -> float:
        return float(np.sum(weight * (np.exp(x) - x)))

    def gradient(x: Vector) -> Vector:
        return weight * (np.exp(x) - 1.0)

    return value, gradient, np.ones(n)


def diagonal1(n: int):
    """
    sum exp(x_i) - i x_i, minimum at x_i = ln i, start (1/n, ..., 1/n).
    """
    index = np.arange(1, n + 1, dtype=float)
    _frozen(index)

    def value(x: Vector) -> float:
        return float(np.sum(np.exp(x) - index * x))

    def gradient(x: Vector) -> Vector:
        return np.exp(x) - index

    return value, gradient, np.full(n, 1.0 / n)


def extended_tridiagonal1(n: int):
    """
    sum (x_{2i-1} + x_{2i} - 3)^2 + (x_{2i-1} - x_{2i} + 1)^4, minimum 0 at (1, 2), start (2, ..., 2).
    """

    def value(x: Vector) -> float:
        a, b = _pairs(x)
        return float(np.sum((a + b - 3.0) ** 2 + (a - b + 1.0) ** 4))

    def gradient(x: Vector) -> Vector:
        a, b = _pairs(x)
        p = 2.0 * (a + b - 3.0)
        q = 4.0 * (a - b + 1.0) ** 3
        return _interleave(p + q, p - q)

    return value, gradient, np.full(n, 2.0)


def generalized_quadratic(n: int):
    """
    sum_{i<n} x_i^2 + (x_{i+1} + x_i^2)^2 (generalized quartic form), minimum 0 at the origin,
    start (1, ..., 1).
    """

    def value(x: Vector) -> float:
        a, b = x[:-1], x[1:]
        return float(np.sum(a * a + (b + a * a) ** 2))

    def gradient(x: Vector) -> Vector:
        a, b = x[:-1], x[1:]
        t = b + a * a
        g = np.zeros(n)
        g[:-1] += 2.0 * a + 4.0 * a * t
        g[1:] += 2.0 * t
        return g

    return value, gradient, np.ones(n)


def perturbed_quadratic(n: int):
    """
    sum i x_i^2 + (sum x_i)^2 / 100, minimum 0 at the origin, start (0.5, ..., 0.5).
    """
    index = np.arange(1, n + 1, dtype=float)
    _frozen(index)

    def value(x: Vector) -> float:
        return float(np.sum(index * x * x) + np.sum(x) ** 2 / 100.0)

    def gradient(x: Vector) -> Vector:
        return 2.0 * index * x + np.sum(x) / 50.0

    return value, gradient, np.full(n, 0.5)


def extended_himmelblau(n: int):
    """
    sum (x_{2i-1}^2 + x_{2i} - 11)^2 + (x_{2i-1} + x_{2i}^2 - 7)^2, minimum 0, start (1, ..., 1).
    """

    def value(x: Vector) -> float:
        a, b = _pairs(x)
        return float(np.sum((a * a + b - 11.0) ** 2 + (a + b * b - 7.0) ** 2))

    def gradient(x: Vector) -> Vector:
        a, b = _pairs(x)
        p = a * a + b - 11.0
        q = a + b * b - 7.0
        return _interleave(4.0 * a * p + 2.0 * q, 2.0 * p + 4.0 * b * q)

    return value, gradient, np.ones(n)


def fletchcr(n: int):
    """
    sum_{i<n} 100 (x_{i+1} - x_i + 1 - x_i^2)^2, minimum 0 (e.g. at (1, ..., 1)), start at the origin.
    """

    def value(x: Vector) -> float:
        a, b = x[:-1], x[1:]
        return float(100.0 * np.sum((b - a + 1.0 - a * a) ** 2))

    def gradient(x: Vector) -> Vector:
        a, b = x[:-1], x[1:]
        r = 200.0 * (b - a + 1.0 - a * a)
        g = np.zeros(n)
        g[:-1] -= r * (1.0 + 2.0 * a)
        g[1:] += r
        return g

    return value, gradient, np.zeros(n)


def quadratic_qf1(n: int):
    """
    0.5 sum i x_i^2 - x_n, minimum -1/(2n) at (0, ..., 0, 1/n), start (1, ..., 1).
    """
    index = np.arange(1, n + 1, dtype=float)
    _frozen(index)

    def value(x: Vector) -> float:
        return float(0.5 * np.sum(index * x * x) - x[-1])

    def gradient(x: Vector) -> Vector:
        g = index * x
        g[-1] -= 1.0
        return g

    return value, gradient, np.ones(n)
