import math

import numpy as np
import pytest

from models.expansion import PUBLISHED_COEFFICIENTS, KernelExpansion
from services.kernel_service import (
    Objective,
    epsilon_error,
    evaluate_expansion,
    expansion_objective,
    expansion_terms,
    expansion_to_gamma,
    half_kernel_approx,
)
from utils.errors import DomainError
from utils.helpers import uniform_grid

# max |epsilon_1| on [-5, 5] at step 1e-4, reached near |t| = 1.7
EPSILON_MAX = 0.03170441322481917


def test_published_coefficients_shape():
    assert PUBLISHED_COEFFICIENTS.terms == ((1.0, 5.5), (5.5, 2.75))
    beta0, beta1 = PUBLISHED_COEFFICIENTS.betas
    assert beta0 == 2 * beta1


def test_expansion_rejects_empty_and_non_decaying_terms():
    with pytest.raises(DomainError):
        KernelExpansion(terms=())
    with pytest.raises(DomainError):
        KernelExpansion(terms=((1.0, 0.0),))
    with pytest.raises(DomainError):
        KernelExpansion(terms=((1.0, 2.0), (1.0, -1.0)))
    with pytest.raises(DomainError):
        KernelExpansion(terms=((float("nan"), 2.0),))


def test_evaluate_at_origin_is_one():
    assert evaluate_expansion(PUBLISHED_COEFFICIENTS, 0.0) == 1.0
    assert evaluate_expansion(KernelExpansion(terms=((1.0, 3.0), (7.0, 1.0), (2.0, 0.5))), 0.0) == 1.0


def test_evaluate_at_one_matches_closed_form():
    expected = math.exp(-5.5) + 5.5 * math.exp(-2.75)
    assert evaluate_expansion(PUBLISHED_COEFFICIENTS, 1.0) == pytest.approx(expected, rel=1e-15)


def test_evaluate_is_exactly_even():
    rng = np.random.default_rng(20180725)
    t = rng.uniform(-20.0, 20.0, size=10_000)
    np.testing.assert_array_equal(evaluate_expansion(PUBLISHED_COEFFICIENTS, t), evaluate_expansion(PUBLISHED_COEFFICIENTS, -t))
    assert evaluate_expansion(PUBLISHED_COEFFICIENTS, -0.0) == evaluate_expansion(PUBLISHED_COEFFICIENTS, 0.0)


def test_evaluate_decays():
    assert evaluate_expansion(PUBLISHED_COEFFICIENTS, 60.0) < 1e-10
    assert evaluate_expansion(PUBLISHED_COEFFICIENTS, -60.0) < 1e-10


@pytest.mark.parametrize("bad", [float("nan"), float("inf"), -float("inf")])
def test_non_finite_t_is_a_domain_error(bad):
    with pytest.raises(DomainError):
        evaluate_expansion(PUBLISHED_COEFFICIENTS, bad)
    with pytest.raises(DomainError):
        epsilon_error(PUBLISHED_COEFFICIENTS, bad)


def test_terms_sum_to_expansion():
    t = uniform_grid(-5.0, 5.0, 1001)
    terms = expansion_terms(PUBLISHED_COEFFICIENTS, t)
    assert terms.shape == (2, 1001)
    np.testing.assert_array_equal(terms[0] + terms[1], evaluate_expansion(PUBLISHED_COEFFICIENTS, t))


def test_epsilon_vanishes_at_origin_and_far_out():
    assert epsilon_error(PUBLISHED_COEFFICIENTS, 0.0) == 0.0
    assert abs(epsilon_error(PUBLISHED_COEFFICIENTS, 50.0)) < 1e-12
    assert abs(epsilon_error(PUBLISHED_COEFFICIENTS, -50.0)) < 1e-12


def test_epsilon_max_on_analysis_window():
    t = uniform_grid(-5.0, 5.0, 100_001)
    worst = np.max(np.abs(epsilon_error(PUBLISHED_COEFFICIENTS, t)))
    assert worst == pytest.approx(EPSILON_MAX, abs=1e-15)


def test_half_kernel_at_origin():
    assert half_kernel_approx(0.0, 2.75) == 1.0


@pytest.mark.parametrize("t, gamma", [(-1e-3, 2.75), (1.0, 0.0), (1.0, -2.75), (float("nan"), 2.75)])
def test_half_kernel_domain(t, gamma):
    with pytest.raises(DomainError):
        half_kernel_approx(t, gamma)


def test_half_kernel_is_the_expansion_at_half_argument():
    rng = np.random.default_rng(7)
    t = rng.uniform(0.0, 20.0, size=100_000)
    np.testing.assert_allclose(
        half_kernel_approx(t, 2.75),
        evaluate_expansion(PUBLISHED_COEFFICIENTS, t / 2),
        rtol=1e-15,
        atol=0.0,
    )


def test_half_kernel_error_matches_epsilon_under_doubling():
    s = uniform_grid(0.0, 5.0, 50_001)  # step 1e-4
    t = 2 * s
    half_error = np.exp(-t * t / 4) - half_kernel_approx(t, 2.75)
    np.testing.assert_allclose(half_error, epsilon_error(PUBLISHED_COEFFICIENTS, s), rtol=0.0, atol=1e-15)
    assert np.max(np.abs(half_error)) == pytest.approx(np.max(np.abs(epsilon_error(PUBLISHED_COEFFICIENTS, s))), abs=1e-15)
    assert np.max(np.abs(half_error)) == pytest.approx(EPSILON_MAX, abs=1e-15)


def test_expansion_to_gamma():
    assert expansion_to_gamma(PUBLISHED_COEFFICIENTS).gamma == 2.75
    with pytest.raises(DomainError):
        expansion_to_gamma(KernelExpansion(terms=((1.0, 5.0), (5.5, 2.75))))
    with pytest.raises(DomainError):
        expansion_to_gamma(KernelExpansion(terms=((1.0, 5.5),)))


def test_objectives_are_ordered():
    l2 = expansion_objective(PUBLISHED_COEFFICIENTS, 5.0, Objective.L2)
    linf = expansion_objective(PUBLISHED_COEFFICIENTS, 5.0, "linf")
    assert 0 < l2 < linf < 0.05
