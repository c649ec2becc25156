# -*- coding: utf-8 -*-

__title__ = 'Non-monotone conjugate gradient solver'
__author__ = 'Roman'

from .nonmonotone import (
    EtaScheme,
    NonmonotoneMemory,
    eta_ahookhosh,
    eta_amini,
    eta_trig,
    reference_value,
    update_memory,
)
from .stepsize import StepPair, cbb_step, initial_step
from .direction import BetaRule, beta_new, bounded_beta, direction, ensure_descent, omega_adaptive
from .config import SolverConfig, parse_omega
from .driver import (
    NonnegativeOrthant,
    Projection,
    SolverReport,
    SolverStatus,
    TraceRecord,
    backtrack,
    minimize,
    require_finite,
    write_trace_csv,
)

__all__ = [
    'EtaScheme', 'NonmonotoneMemory', 'eta_ahookhosh', 'eta_amini', 'eta_trig', 'reference_value', 'update_memory',
    'StepPair', 'cbb_step', 'initial_step',
    'BetaRule', 'beta_new', 'bounded_beta', 'direction', 'ensure_descent', 'omega_adaptive',
    'SolverConfig', 'parse_omega',
    'NonnegativeOrthant', 'Projection', 'SolverReport', 'SolverStatus', 'TraceRecord', 'backtrack', 'minimize',
    'require_finite', 'write_trace_csv',
]
