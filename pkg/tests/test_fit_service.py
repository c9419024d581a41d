import pytest

from models.expansion import PUBLISHED_COEFFICIENTS, KernelExpansion
from services.fit_service import ExpansionFitter, fit_expansion
from services.kernel_service import Objective, expansion_objective
from utils.errors import ConvergenceError, DomainError


@pytest.fixture(scope="module")
def fitter():
    return ExpansionFitter()


def test_two_term_linf_fit_not_worse_than_published(fitter):
    result = fitter.fit(2, 5.0, Objective.LINF)
    published = expansion_objective(PUBLISHED_COEFFICIENTS, 5.0, Objective.LINF)
    assert result.expansion.n_terms == 2
    assert result.expansion.alphas[0] == 1.0
    assert result.value == expansion_objective(result.expansion, 5.0, Objective.LINF)
    assert result.value <= published


def test_single_term_fit_has_pinned_alpha(fitter):
    result = fitter.fit(1, 5.0, "l2")
    ((alpha0, beta0),) = result.expansion.terms
    assert alpha0 == 1.0
    assert beta0 > 0
    assert result.converged_starts >= 1


def test_descent_from_published_start(fitter):
    result = fitter.fit(2, 5.0, Objective.L2, initial=PUBLISHED_COEFFICIENTS)
    assert result.value <= expansion_objective(PUBLISHED_COEFFICIENTS, 5.0, Objective.L2)


def test_fit_is_deterministic():
    first = fit_expansion(2, 5.0, Objective.L2)
    second = fit_expansion(2, 5.0, Objective.L2)
    assert first == second


def test_iteration_cap_reports_best_so_far():
    with pytest.raises(ConvergenceError) as excinfo:
        ExpansionFitter(max_iter=1).fit(2, 5.0, Objective.LINF)
    assert isinstance(excinfo.value.best, KernelExpansion)
    assert excinfo.value.achieved <= expansion_objective(PUBLISHED_COEFFICIENTS, 5.0, Objective.LINF)


@pytest.mark.parametrize("n_terms, t_max", [(0, 5.0), (1.5, 5.0), (2, 0.0), (2, -1.0)])
def test_invalid_fit_requests(fitter, n_terms, t_max):
    with pytest.raises(DomainError):
        fitter.fit(n_terms, t_max, Objective.L2)


def test_initial_must_pin_alpha0(fitter):
    with pytest.raises(DomainError):
        fitter.fit(2, 5.0, Objective.L2, initial=KernelExpansion(terms=((2.0, 5.5), (5.5, 2.75))))
