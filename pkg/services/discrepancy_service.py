"""
Discrepancy Service - approximation vs. reference over grids, maxima, kernel profiles
"""
import numpy as np
import pandas as pd
from scipy.optimize import minimize_scalar

from config import COARSE_STEPS, REFINE_XTOL
from models.arguments import ComplexArgument, PseudoVoigtParams
from models.expansion import PUBLISHED_COEFFICIENTS
from models.report import REPORT_COLUMNS, DiscrepancyReport
from services.kernel_service import evaluate_expansion, expansion_terms
from services.oracle_service import cached_oracle
from services.pseudo_voigt_service import faddeeva_approx
from utils.errors import ConvergenceError, DomainError
from utils.helpers import log_status, require_finite, uniform_grid

COMPONENTS = ("re", "im")


class DiscrepancyService:
    """Compares the rational approximation against the quadrature oracle"""

    def __init__(self, params=None, cfg=None, oracle=None):
        self.params = params if params is not None else PseudoVoigtParams()
        self.oracle = oracle if oracle is not None else cached_oracle(cfg)

    def evaluate_point(self, x, y):
        """One report row at (x, y)"""
        arg = ComplexArgument(x, y)
        approx = faddeeva_approx(arg, self.params)
        try:
            ref = self.oracle.w_reference(arg)
        except ConvergenceError as e:
            raise e.at(arg.x, arg.y) from e
        return {
            "x": arg.x,
            "y": arg.y,
            "k_approx": approx.re,
            "l_approx": approx.im,
            "k_ref": ref.re,
            "l_ref": ref.im,
            "delta_re": abs(ref.re - approx.re),
            "delta_im": abs(ref.im - approx.im),
        }

    def delta(self, x, y, component="re"):
        """Absolute difference of one component at (x, y)"""
        if component not in COMPONENTS:
            raise DomainError(f"❌ component must be one of {COMPONENTS}, got {component!r}")
        row = self.evaluate_point(x, y)
        return row["delta_re"] if component == "re" else row["delta_im"]

    def scan(self, grid):
        """Full grid in y-major, x-ascending order"""
        xs = grid.x_nodes()
        rows = []
        for y in grid.y_values:
            log_status(f"📊 Scanning y={y:g}: {len(xs)} x nodes on [{grid.x_min:g}, {grid.x_max:g}]")
            for x in xs:
                rows.append(self.evaluate_point(float(x), y))

        report = DiscrepancyReport.from_rows(pd.DataFrame.from_records(rows, columns=REPORT_COLUMNS))
        log_status(f"✅ Scan done: max delta_re={report.max_re.value:.6g}, max delta_im={report.max_im.value:.6g}")
        return report

    def find_max_discrepancy(self, y, x_max, coarse_steps=COARSE_STEPS, component="re", xtol=REFINE_XTOL):
        """Coarse scan over [0, x_max], then bounded refinement around the best cell.

        Returns (value, x_at_max); the refined value never falls below the coarse one.
        """
        require_finite("y", y)
        require_finite("x_max", x_max)
        if y < 0:
            raise DomainError(f"❌ y must be >= 0, got {y!r}")
        if x_max <= 0:
            raise DomainError(f"❌ x_max must be > 0, got {x_max!r}")

        xs = uniform_grid(0.0, x_max, coarse_steps)
        log_status(f"🔍 Coarse search for max delta_{component} at y={y:g} over {len(xs)} nodes")
        coarse = np.array([self.delta(float(x), y, component) for x in xs])
        best = int(coarse.argmax())
        coarse_value, coarse_x = float(coarse[best]), float(xs[best])

        lo = float(xs[max(best - 1, 0)])
        hi = float(xs[min(best + 1, len(xs) - 1)])
        refined = minimize_scalar(
            lambda x: -self.delta(x, y, component),
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": xtol},
        )
        refined_value = -float(refined.fun)
        log_status(f"🎯 Refined in [{lo:g}, {hi:g}]: {refined_value:.8g} at x={float(refined.x):.8g}")

        if refined_value > coarse_value:
            return refined_value, float(refined.x)
        return coarse_value, coarse_x


def scan(grid, p=None, cfg=None):
    """Discrepancy report over a ScanGrid"""
    return DiscrepancyService(p, cfg).scan(grid)


def find_max_discrepancy(p, cfg, y, x_max, coarse_steps=COARSE_STEPS, component="re"):
    """(value, x_at_max) of delta_re or delta_im along x at fixed y"""
    return DiscrepancyService(p, cfg).find_max_discrepancy(y, x_max, coarse_steps, component)


def kernel_profile(t_min, t_max, steps, exp=PUBLISHED_COEFFICIENTS):
    """Per-t table of the expansion terms, their sum, exp(-t^2) and epsilon"""
    require_finite("t range", t_min, t_max)
    if not t_min < t_max:
        raise DomainError(f"❌ t_min must be < t_max, got [{t_min}, {t_max}]")
    t = uniform_grid(t_min, t_max, steps)

    terms = expansion_terms(exp, t)
    total = evaluate_expansion(exp, t)
    exact = np.exp(-t * t)

    table = {"t": t}
    for n in range(exp.n_terms):
        table[f"f{n}"] = terms[n]
    table["sum"] = total
    table["exact"] = exact
    table["epsilon"] = exact - total
    return pd.DataFrame(table)
