# Utils package
from .decision_logger import SolveDecisionLogger, get_logger, reset_logger
from .exporters import write_dot, write_trace

__all__ = [
    'SolveDecisionLogger',
    'get_logger',
    'reset_logger',
    'write_dot',
    'write_trace'
]
