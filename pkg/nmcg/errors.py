# -*- coding: utf-8 -*-

"""
Package exceptions
"""

from typing import Optional


class NmcgError(RuntimeError):
    pass


class EvaluationError(NmcgError):
    """
    Non-finite objective or gradient value.
    """

    def __init__(self, message: str, coordinate: Optional[int] = None):
        super().__init__(message)
        self.coordinate = coordinate


class LineSearchFailure(NmcgError):
    """
    Backtracking exhausted its cap without satisfying the non-monotone condition.
    """

    def __init__(self, message: str, alpha: float, evals: int):
        super().__init__(message)
        self.alpha = alpha
        self.evals = evals


class NumericalError(NmcgError):
    pass


class InvariantViolation(NmcgError):
    pass


class DegenerateDirection(NmcgError):
    pass


class UnknownProblem(NmcgError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class DimensionError(NmcgError, ValueError):
    pass


class PreconditionError(NmcgError, ValueError):
    pass
