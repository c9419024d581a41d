"""
Kernel Expansion Service - evaluation of the damped-exponential series for exp(-t^2)
"""
from enum import Enum

import numpy as np

from config import FIT_GRID_POINTS
from models.arguments import PseudoVoigtParams
from utils.errors import DomainError
from utils.helpers import require_finite, uniform_grid


class Objective(str, Enum):
    """Error norms the fitter can minimize"""

    L2 = "l2"
    LINF = "linf"


def _as_output(values):
    values = np.asarray(values)
    return float(values) if values.ndim == 0 else values


def _abs_t(t):
    t = np.asarray(t, dtype=float)
    require_finite("t", t)
    # signed zero collapses here, so evenness is exact
    return np.abs(t)


def sum_terms(alphas, betas, abs_t):
    total = np.zeros_like(abs_t)
    for n, (alpha, beta) in enumerate(zip(alphas, betas)):
        total = total + alpha * abs_t**n * np.exp(-beta * abs_t)
    return total


def expansion_terms(exp, t):
    """Individual terms alpha_n |t|^n exp(-beta_n |t|), one row per n"""
    abs_t = _abs_t(t)
    return np.stack([alpha * abs_t**n * np.exp(-beta * abs_t) for n, (alpha, beta) in enumerate(exp.terms)])


def evaluate_expansion(exp, t):
    """Sum of the expansion terms at t (scalar or array)"""
    return _as_output(sum_terms(exp.alphas, exp.betas, _abs_t(t)))


def epsilon_error(exp, t):
    """Residual exp(-t^2) minus the expansion"""
    t = np.asarray(t, dtype=float)
    approx = sum_terms(exp.alphas, exp.betas, _abs_t(t))
    return _as_output(np.exp(-t * t) - approx)


def half_kernel_approx(t, gamma):
    """exp(-gamma t) + gamma t exp(-gamma t / 2), the half-line stand-in for exp(-t^2/4)"""
    t = np.asarray(t, dtype=float)
    require_finite("t", t)
    if np.any(t < 0):
        raise DomainError("❌ t must be >= 0 for the half-line kernel")
    if not np.isfinite(gamma) or gamma <= 0:
        raise DomainError(f"❌ gamma must be finite and > 0, got {gamma!r}")
    return _as_output(np.exp(-gamma * t) + gamma * t * np.exp(-gamma * t / 2))


def expansion_to_gamma(exp):
    """Recover gamma from a two-term expansion of the form (1, 2g), (2g, g)"""
    if exp.n_terms != 2:
        raise DomainError(f"❌ Only two-term expansions map to a gamma, got {exp.n_terms} terms")
    (alpha0, beta0), (alpha1, beta1) = exp.terms
    if alpha0 != 1.0 or beta0 != 2 * beta1 or alpha1 != beta0:
        raise DomainError(
            f"❌ Expansion {exp.terms} is not of the form (1, 2g), (2g, g)"
        )
    return PseudoVoigtParams(gamma=beta1)


def objective_value(residual, objective):
    """Reduce a residual vector with the chosen norm"""
    objective = Objective(objective)
    if objective is Objective.LINF:
        return float(np.max(np.abs(residual)))
    return float(np.sqrt(np.mean(residual * residual)))


def fit_grid(t_max, grid_points):
    if not np.isfinite(t_max) or t_max <= 0:
        raise DomainError(f"❌ t_max must be finite and > 0, got {t_max!r}")
    return uniform_grid(0.0, t_max, grid_points)


def expansion_objective(exp, t_max, objective, grid_points=FIT_GRID_POINTS):
    """Norm of epsilon over the uniform fitting grid on [0, t_max]"""
    grid = fit_grid(t_max, grid_points)
    return objective_value(epsilon_error(exp, grid), objective)
