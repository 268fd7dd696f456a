"""
Models Package - Tipos de domínio e fixtures de exemplo
"""

from .instance import Instance, InstanceFile, coding_gain, format_gain, symbol_name, validate_instance
from .code import CodedSymbol, IndexCode, IterationRecord, SolveTrace

__all__ = [
    'Instance',
    'InstanceFile',
    'CodedSymbol',
    'IndexCode',
    'IterationRecord',
    'SolveTrace',
    'coding_gain',
    'format_gain',
    'symbol_name',
    'validate_instance'
]
