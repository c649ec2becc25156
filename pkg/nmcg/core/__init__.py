# -*- coding: utf-8 -*-

__title__ = 'Problem abstraction'
__author__ = 'Roman'

from .problem import DifferentiableProblem, EvalCounters, Evaluator, Vector
from .gradcheck import check_gradient, default_step

__all__ = ['DifferentiableProblem', 'EvalCounters', 'Evaluator', 'Vector', 'check_gradient', 'default_step']
