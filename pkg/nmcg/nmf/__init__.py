# -*- coding: utf-8 -*-

__title__ = 'ANLS non-negative matrix factorization'
__author__ = 'Roman'

from .anls import (
    NMF_COLUMNS,
    GradientMeasure,
    NmfConfig,
    NmfReport,
    NmfRun,
    SubproblemResult,
    anls,
    initial_factors,
    load_matrix_csv,
    nmf_benchmark,
    nmf_gradients,
    nmf_objective,
    random_matrix,
    relative_error,
    rounding_floor,
    solve_subproblem_H,
    solve_subproblem_W,
    stacked_gradient_norm,
    write_nmf_csv,
)

__all__ = [
    'NMF_COLUMNS', 'GradientMeasure', 'NmfConfig', 'NmfReport', 'NmfRun', 'SubproblemResult', 'anls', 'initial_factors',
    'load_matrix_csv', 'nmf_benchmark', 'nmf_gradients', 'nmf_objective', 'random_matrix', 'relative_error',
    'rounding_floor', 'solve_subproblem_H', 'solve_subproblem_W', 'stacked_gradient_norm', 'write_nmf_csv',
]
