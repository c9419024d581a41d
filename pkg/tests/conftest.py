"""
Shared fixtures
"""
import pytest

from models.arguments import PseudoVoigtParams, QuadratureConfig
from models.report import ScanGrid
from services.discrepancy_service import DiscrepancyService

@pytest.fixture(scope="session")
def default_y_values():
    return (0.0, 0.1, 0.5, 1.0)


@pytest.fixture
def params():
    return PseudoVoigtParams(gamma=2.75)


@pytest.fixture
def quad_cfg():
    return QuadratureConfig(t_upper=40.0, abs_tol=1e-10, max_subdivisions=500)


@pytest.fixture(scope="session")
def default_grid(default_y_values):
    return ScanGrid(x_min=0.0, x_max=10.0, x_steps=1001, y_values=default_y_values)


@pytest.fixture(scope="session")
def discrepancy_service():
    return DiscrepancyService(PseudoVoigtParams(gamma=2.75), QuadratureConfig())


@pytest.fixture(scope="session")
def default_report(discrepancy_service, default_grid):
    return discrepancy_service.scan(default_grid)
