# -*- coding: utf-8 -*-

__title__ = 'Performance profile benchmark'
__author__ = 'Roman'

from .profile import (
    Metric,
    ProfileTable,
    exact_tau_grid,
    export_tau_grid,
    performance_ratios,
    profile,
    uniform_tau_grid,
)
from .suite import (
    PROFILE_COLUMNS,
    RUN_COLUMNS,
    RunRecord,
    SolverSpec,
    SuiteResult,
    build_tables,
    profile_paths,
    run_one,
    run_suite,
    write_profile_csv,
    write_runs_csv,
)

__all__ = [
    'Metric', 'ProfileTable', 'exact_tau_grid', 'export_tau_grid', 'performance_ratios', 'profile',
    'uniform_tau_grid',
    'PROFILE_COLUMNS', 'RUN_COLUMNS', 'RunRecord', 'SolverSpec', 'SuiteResult', 'build_tables', 'profile_paths',
    'run_one', 'run_suite', 'write_profile_csv', 'write_runs_csv',
]
