"""
Layers Package - Sistema de Processamento em Camadas
"""

from .raw_layer import RawLayer, parse_instance, serialize_instance
from .trusted_layer import ReductionResult, TrustedLayer, reduce_to_single_unicast
from .business_layer import ALGORITHMS, BusinessLayer, SolveResult, solve_instance
from .experiment_layer import ExperimentLayer, ExperimentSpec, run_experiment

__all__ = [
    'RawLayer',
    'TrustedLayer',
    'BusinessLayer',
    'ExperimentLayer',
    'ExperimentSpec',
    'ReductionResult',
    'SolveResult',
    'ALGORITHMS',
    'parse_instance',
    'serialize_instance',
    'reduce_to_single_unicast',
    'solve_instance',
    'run_experiment'
]
