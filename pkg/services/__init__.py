"""
Service modules
"""
from .kernel_service import (
    Objective,
    evaluate_expansion,
    expansion_terms,
    epsilon_error,
    half_kernel_approx,
    expansion_to_gamma,
    expansion_objective,
)
from .fit_service import ExpansionFitter, FitResult, fit_expansion
from .pseudo_voigt_service import (
    voigt_k_approx,
    voigt_l_approx,
    faddeeva_approx,
    faddeeva_approx_array,
    voigt_line_profile,
)
from .oracle_service import ReferenceOracle, QuadratureResult, k_reference, l_reference, w_reference
from .discrepancy_service import DiscrepancyService, scan, find_max_discrepancy, kernel_profile

__all__ = [
    'Objective',
    'evaluate_expansion',
    'expansion_terms',
    'epsilon_error',
    'half_kernel_approx',
    'expansion_to_gamma',
    'expansion_objective',
    'ExpansionFitter',
    'FitResult',
    'fit_expansion',
    'voigt_k_approx',
    'voigt_l_approx',
    'faddeeva_approx',
    'faddeeva_approx_array',
    'voigt_line_profile',
    'ReferenceOracle',
    'QuadratureResult',
    'k_reference',
    'l_reference',
    'w_reference',
    'DiscrepancyService',
    'scan',
    'find_max_discrepancy',
    'kernel_profile',
]
