"""
Domain types and loaders
"""
from .expansion import KernelExpansion, PUBLISHED_COEFFICIENTS
from .arguments import ComplexArgument, PseudoVoigtParams, FaddeevaValue, QuadratureConfig
from .report import ScanGrid, MaxLocation, DiscrepancyReport, REPORT_COLUMNS
from .data_loader import CoefficientLoader, load_expansion

__all__ = [
    'KernelExpansion',
    'PUBLISHED_COEFFICIENTS',
    'ComplexArgument',
    'PseudoVoigtParams',
    'FaddeevaValue',
    'QuadratureConfig',
    'ScanGrid',
    'MaxLocation',
    'DiscrepancyReport',
    'REPORT_COLUMNS',
    'CoefficientLoader',
    'load_expansion',
]
