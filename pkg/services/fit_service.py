"""
Expansion Fitting Service - reproducible search for (alpha_n, beta_n)
"""
import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from config import FIT_GRID_POINTS, FIT_MAX_ITER, FIT_START_BETAS
from models.expansion import KernelExpansion, PUBLISHED_COEFFICIENTS
from services.kernel_service import (
    Objective,
    sum_terms,
    expansion_objective,
    fit_grid,
    objective_value,
)
from utils.errors import ConvergenceError, DomainError
from utils.helpers import log_status


@dataclass(frozen=True)
class FitResult:
    expansion: KernelExpansion
    objective: Objective
    value: float
    converged_starts: int
    total_starts: int


class ExpansionFitter:
    """Nelder-Mead fit of the expansion with alpha_0 pinned to 1.

    Parameters are (log beta_0..log beta_N, alpha_1..alpha_N); the log keeps
    every beta positive. Starts come from the product of start_betas, tried in
    a fixed order; the first candidate reaching the lowest objective wins.
    """

    def __init__(self, grid_points=FIT_GRID_POINTS, max_iter=FIT_MAX_ITER, start_betas=None):
        self.grid_points = grid_points
        self.max_iter = max_iter
        self.start_betas = list(start_betas or FIT_START_BETAS)
        if not self.start_betas or any(b <= 0 for b in self.start_betas):
            raise DomainError(f"❌ start betas must be positive, got {self.start_betas}")

    def _unpack(self, params, n_terms):
        betas = np.exp(params[:n_terms])
        alphas = np.concatenate(([1.0], params[n_terms:]))
        return alphas, betas

    def _pack(self, expansion):
        alphas, betas = expansion.alphas, expansion.betas
        return np.array([math.log(b) for b in betas] + list(alphas[1:]))

    def _starts(self, n_terms, initial):
        starts = []
        if initial is not None:
            starts.append(self._pack(initial))
        for betas in itertools.product(self.start_betas, repeat=n_terms):
            terms = tuple((1.0, beta) for beta in betas)
            starts.append(self._pack(KernelExpansion(terms=terms)))
        return starts

    def fit(self, n_terms, t_max, objective=Objective.L2, initial=None):
        """Fit n_terms coefficient pairs minimizing the objective of epsilon on [0, t_max]"""
        if int(n_terms) != n_terms or n_terms < 1:
            raise DomainError(f"❌ n_terms must be an integer >= 1, got {n_terms!r}")
        n_terms = int(n_terms)
        objective = Objective(objective)
        grid = fit_grid(t_max, self.grid_points)
        exact = np.exp(-grid * grid)

        if initial is None and n_terms == PUBLISHED_COEFFICIENTS.n_terms:
            initial = PUBLISHED_COEFFICIENTS
        if initial is not None:
            if initial.n_terms != n_terms:
                raise DomainError(f"❌ initial expansion has {initial.n_terms} terms, expected {n_terms}")
            if initial.alphas[0] != 1.0:
                raise DomainError("❌ initial expansion must have alpha_0 = 1")

        def loss(params):
            alphas, betas = self._unpack(params, n_terms)
            if not np.all(np.isfinite(betas)) or np.any(betas <= 0):
                return np.inf
            with np.errstate(over="ignore", invalid="ignore"):
                value = objective_value(exact - sum_terms(alphas, betas, grid), objective)
            return value if np.isfinite(value) else np.inf

        best = None
        best_value = np.inf
        if initial is not None:
            best = initial
            best_value = expansion_objective(initial, t_max, objective, self.grid_points)

        starts = self._starts(n_terms, initial)
        converged = 0
        log_status(f"🔧 Fitting {n_terms} term(s) on [0, {t_max}] ({objective.value}), {len(starts)} starts")

        for params0 in starts:
            result = minimize(
                loss,
                params0,
                method="Nelder-Mead",
                options={"maxiter": self.max_iter, "maxfev": 2 * self.max_iter, "xatol": 1e-9, "fatol": 1e-13},
            )
            if result.success:
                converged += 1
            alphas, betas = self._unpack(result.x, n_terms)
            try:
                candidate = KernelExpansion(terms=tuple(zip(alphas, betas)))
            except DomainError:
                continue
            # score every candidate through the same path so comparisons are exact
            value = expansion_objective(candidate, t_max, objective, self.grid_points)
            if value < best_value:
                best, best_value = candidate, value

        if converged == 0 or best is None:
            raise ConvergenceError(
                f"❌ Optimizer did not converge from any of {len(starts)} starts within {self.max_iter} iterations",
                best=best,
                achieved=best_value,
            )

        log_status(f"✅ Best {objective.value} objective: {best_value:.6g}")
        return FitResult(
            expansion=best,
            objective=objective,
            value=best_value,
            converged_starts=converged,
            total_starts=len(starts),
        )


def fit_expansion(n_terms, t_max, objective=Objective.L2, initial=None):
    """Fitted KernelExpansion with default fitter settings"""
    return ExpansionFitter().fit(n_terms, t_max, objective, initial).expansion
