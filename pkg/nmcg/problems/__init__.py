# -*- coding: utf-8 -*-

__title__ = 'Test problem collection'
__author__ = 'Roman'

from .registry import (
    CANONICAL_DIMENSIONS,
    PROBLEMS,
    ProblemSpec,
    format_optimum,
    list_problems,
    make_problem,
    problem_spec,
    suite_instances,
)

__all__ = [
    'CANONICAL_DIMENSIONS', 'PROBLEMS', 'ProblemSpec', 'format_optimum', 'list_problems', 'make_problem',
    'problem_spec', 'suite_instances',
]
