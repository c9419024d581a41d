import functools
import math

import numpy as np
import pytest
from scipy.special import erfcx

from models.arguments import ComplexArgument, FaddeevaValue, QuadratureConfig
from services.kernel_service import half_kernel_approx
from services.oracle_service import ReferenceOracle, cached_oracle, k_reference, l_reference, w_reference
from services.pseudo_voigt_service import faddeeva_approx
from utils.errors import ConvergenceError, DomainError

SPOT_X = (0.0, 2.5, 5.0, 7.5, 10.0)
SPOT_Y = (0.0, 0.25, 0.5, 1.0, 2.0)


@pytest.fixture(scope="module")
def oracle():
    return ReferenceOracle(QuadratureConfig())


def test_identity_at_origin(oracle):
    assert oracle.k_reference(ComplexArgument(0.0, 0.0)) == pytest.approx(1.0, abs=1e-10)
    value = w_reference(ComplexArgument(0.0, 0.0))
    assert isinstance(value, FaddeevaValue)
    assert value.re == pytest.approx(1.0, abs=1e-10)
    assert value.im == 0.0


@pytest.mark.parametrize("y", [0.0, 0.5, 1.0, 5.0])
def test_l_vanishes_on_imaginary_axis(oracle, y):
    assert oracle.l_reference(ComplexArgument(0.0, y)) == 0.0


def test_k_on_imaginary_axis_is_scaled_erfc(oracle):
    # K(0, y) = exp(y^2) erfc(y)
    assert oracle.k_reference(ComplexArgument(0.0, 2.0)) == pytest.approx(float(erfcx(2.0)), abs=1e-9)
    assert k_reference(ComplexArgument(0.0, 0.7)) == pytest.approx(float(erfcx(0.7)), abs=1e-9)


@pytest.mark.parametrize("x", SPOT_X)
@pytest.mark.parametrize("y", SPOT_Y)
def test_adaptive_agrees_with_panel_rule(oracle, x, y):
    arg = ComplexArgument(x, y)
    for part in ("re", "im"):
        assert oracle.transform(arg, part).value == pytest.approx(oracle.panel_reference(arg, part), abs=1e-10)


def test_panel_rule_at_cross_check_points(oracle):
    assert oracle.k_reference(ComplexArgument(3.0, 1.0)) == pytest.approx(
        oracle.panel_reference(ComplexArgument(3.0, 1.0), "re"), abs=1e-10
    )
    assert oracle.l_reference(ComplexArgument(1.0, 0.0)) == pytest.approx(
        oracle.panel_reference(ComplexArgument(1.0, 0.0), "im"), abs=1e-10
    )


def test_oscillatory_end_of_window_meets_tolerance(oracle):
    for part in ("re", "im"):
        result = oracle.transform(ComplexArgument(10.0, 0.0), part)
        assert result.abs_error <= oracle.cfg.abs_tol
        assert result.subdivisions >= 1


def test_parity_on_random_points(oracle):
    rng = np.random.default_rng(2018)
    tol = 2 * oracle.cfg.abs_tol
    for x, y in zip(rng.uniform(-10, 10, 1000), rng.uniform(0, 2, 1000)):
        plus = oracle.w_reference(ComplexArgument(x, y))
        minus = oracle.w_reference(ComplexArgument(-x, y))
        assert abs(plus.re - minus.re) <= tol
        assert abs(plus.im + minus.im) <= tol


def test_k_decreases_with_damping_on_imaginary_axis(oracle):
    values = [oracle.k_reference(ComplexArgument(0.0, y)) for y in (0.0, 0.1, 0.5, 1.0)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_w_reference_is_deterministic():
    arg = ComplexArgument(2.0, 0.5)
    assert w_reference(arg) == w_reference(arg)


def test_w_reference_decays_along_real_axis():
    value = w_reference(ComplexArgument(5.0, 0.0))
    assert abs(value.re) < 0.5
    assert abs(value.im) < 0.5


def test_l_reference_is_odd():
    arg, mirrored = ComplexArgument(1.3, 0.2), ComplexArgument(-1.3, 0.2)
    assert l_reference(arg) == pytest.approx(-l_reference(mirrored), abs=2e-10)


@pytest.mark.parametrize("x, y", [(0.0, 0.0), (1.0, 0.0), (2.0, 0.5), (5.0, 1.0)])
def test_approximate_kernel_reproduces_closed_form(oracle, params, x, y):
    kernel = functools.partial(half_kernel_approx, gamma=params.gamma)
    arg = ComplexArgument(x, y)
    closed = faddeeva_approx(arg, params)
    assert oracle.transform(arg, "re", kernel=kernel).value == pytest.approx(closed.re, abs=1e-6)
    assert oracle.transform(arg, "im", kernel=kernel).value == pytest.approx(closed.im, abs=1e-6)
    assert oracle.panel_reference(arg, "re", kernel=kernel) == pytest.approx(closed.re, abs=1e-6)


def test_subdivision_cap_raises_with_best_estimate():
    oracle = ReferenceOracle(QuadratureConfig(max_subdivisions=1))
    with pytest.raises(ConvergenceError) as excinfo:
        oracle.k_reference(ComplexArgument(10.0, 0.0))
    assert math.isfinite(excinfo.value.best)
    assert excinfo.value.achieved > 0
    assert (excinfo.value.x, excinfo.value.y) == (10.0, 0.0)


def test_cache_shares_values_between_calls():
    oracle = cached_oracle(QuadratureConfig())
    arg = ComplexArgument(4.0, 0.1)
    first = oracle.w_reference(arg)
    second = oracle.w_reference(arg)
    assert first == second
    assert oracle.cache.stats()["hits"] == 1


def test_unknown_part_is_rejected(oracle):
    with pytest.raises(DomainError):
        oracle.transform(ComplexArgument(1.0, 0.0), "abs")


@pytest.mark.parametrize(
    "kwargs",
    [{"t_upper": 20.0}, {"abs_tol": 1e-6}, {"abs_tol": 0.0}, {"max_subdivisions": 0}],
)
def test_quadrature_config_invariants(kwargs):
    with pytest.raises(DomainError):
        QuadratureConfig(**kwargs)
