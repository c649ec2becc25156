# -*- coding: utf-8 -*-

__title__ = 'Non-monotone conjugate gradient toolkit'
__author__ = 'Roman'

from .logger import console_logger
from .core import DifferentiableProblem, EvalCounters, check_gradient
from .solver import EtaScheme, SolverConfig, SolverReport, SolverStatus, minimize
from .problems import make_problem, list_problems
from .nmf import NmfConfig, anls
from .bench import Metric, SolverSpec, performance_ratios, profile, run_suite
from .cli import cli


__all__ = [
    'console_logger', 'DifferentiableProblem', 'EvalCounters', 'check_gradient',
    'EtaScheme', 'SolverConfig', 'SolverReport', 'SolverStatus', 'minimize',
    'make_problem', 'list_problems', 'NmfConfig', 'anls',
    'Metric', 'SolverSpec', 'performance_ratios', 'profile', 'run_suite', 'cli',
]
