"""
Utility modules
"""
from .errors import VoigtError, DomainError, ConvergenceError
from .cache_manager import CacheManager
from .helpers import (
    log_status,
    set_verbose,
    require_finite,
    uniform_grid,
    parse_float_list,
    format_number,
    float_format,
)

__all__ = [
    'VoigtError',
    'DomainError',
    'ConvergenceError',
    'CacheManager',
    'log_status',
    'set_verbose',
    'require_finite',
    'uniform_grid',
    'parse_float_list',
    'format_number',
    'float_format',
]
