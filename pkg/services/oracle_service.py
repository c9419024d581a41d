"""
Reference Oracle Service - K and L by direct quadrature of their integral forms

    K(x, y) = 1/sqrt(pi) * int_0^T exp(-t^2/4) exp(-y t) cos(x t) dt
    L(x, y) = 1/sqrt(pi) * int_0^T exp(-t^2/4) exp(-y t) sin(x t) dt

T defaults to 40, where exp(-T^2/4) is about 1e-174.
"""
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from config import PANEL_ORDER, PANELS
from models.arguments import ComplexArgument, FaddeevaValue, QuadratureConfig
from utils.cache_manager import CacheManager
from utils.errors import ConvergenceError, DomainError
from utils.helpers import uniform_grid

SQRT_PI = math.sqrt(math.pi)
PARTS = ("re", "im")


@dataclass(frozen=True)
class QuadratureResult:
    """Integral already scaled by 1/sqrt(pi), with the achieved error estimate"""

    value: float
    abs_error: float
    subdivisions: int


def _check_part(part):
    if part not in PARTS:
        raise DomainError(f"❌ part must be one of {PARTS}, got {part!r}")


def _gaussian_integrand(x, y, part):
    trig = math.cos if part == "re" else math.sin

    def integrand(t):
        return math.exp(-0.25 * t * t - y * t) * trig(x * t)

    return integrand


def _kernel_integrand(kernel, x, y, part):
    trig = math.cos if part == "re" else math.sin

    def integrand(t):
        return float(kernel(t)) * math.exp(-y * t) * trig(x * t)

    return integrand


class ReferenceOracle:
    """Adaptive Gauss-Kronrod quadrature (QUADPACK via scipy) of the integral forms"""

    def __init__(self, cfg=None, cache=None, panels=PANELS, panel_order=PANEL_ORDER):
        self.cfg = cfg if cfg is not None else QuadratureConfig()
        self.cache = cache
        self.panels = panels
        self.panel_order = panel_order

    def transform(self, arg: ComplexArgument, part="re", kernel=None) -> QuadratureResult:
        """1/sqrt(pi) * int_0^T kernel(t) exp(-y t) cos|sin(x t) dt.

        kernel defaults to exp(-t^2/4); any callable of t >= 0 may stand in.
        """
        _check_part(part)
        if kernel is None:
            integrand = _gaussian_integrand(arg.x, arg.y, part)
        else:
            integrand = _kernel_integrand(kernel, arg.x, arg.y, part)

        result = quad(
            integrand,
            0.0,
            self.cfg.t_upper,
            epsabs=self.cfg.abs_tol,
            epsrel=0.0,
            limit=self.cfg.max_subdivisions,
            full_output=1,
        )
        value, abs_error, info = result[0], result[1], result[2]
        value /= SQRT_PI
        abs_error /= SQRT_PI

        # a fourth element is QUADPACK's warning message (ier > 0)
        if len(result) > 3 or abs_error > self.cfg.abs_tol:
            detail = result[3] if len(result) > 3 else "error estimate above tolerance"
            raise ConvergenceError(
                f"❌ Quadrature for {part} part did not reach abs_tol={self.cfg.abs_tol:g} "
                f"within {self.cfg.max_subdivisions} subdivisions: best={value!r}, "
                f"error={abs_error:.3g} ({detail.strip()})",
                best=value,
                achieved=abs_error,
                x=arg.x,
                y=arg.y,
            )

        return QuadratureResult(value=value, abs_error=abs_error, subdivisions=int(info["last"]))

    def k_reference(self, arg: ComplexArgument) -> float:
        return self.transform(arg, "re").value

    def l_reference(self, arg: ComplexArgument) -> float:
        return self.transform(arg, "im").value

    def w_reference(self, arg: ComplexArgument) -> FaddeevaValue:
        """(K_ref, L_ref) pair, memoized when a cache is attached"""
        settings = self.cfg.as_dict()
        if self.cache is not None:
            cached = self.cache.get(arg.x, arg.y, settings)
            if cached is not None:
                return cached

        value = FaddeevaValue(re=self.k_reference(arg), im=self.l_reference(arg))

        if self.cache is not None:
            self.cache.set(arg.x, arg.y, settings, value)
        return value

    def panel_reference(self, arg: ComplexArgument, part="re", kernel=None) -> float:
        """Fixed composite Gauss-Legendre rule over uniform panels on [0, T].

        Structurally independent of the adaptive path; used to cross-check it.
        """
        _check_part(part)
        nodes, weights = np.polynomial.legendre.leggauss(self.panel_order)
        edges = uniform_grid(0.0, self.cfg.t_upper, self.panels + 1)
        half = 0.5 * np.diff(edges)
        mid = 0.5 * (edges[:-1] + edges[1:])
        t = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
        w = (half[:, None] * weights[None, :]).ravel()

        trig = np.cos if part == "re" else np.sin
        if kernel is None:
            values = np.exp(-0.25 * t * t - arg.y * t) * trig(arg.x * t)
        else:
            values = np.asarray(kernel(t), dtype=float) * np.exp(-arg.y * t) * trig(arg.x * t)
        return float(np.dot(w, values)) / SQRT_PI


def k_reference(arg: ComplexArgument, cfg: QuadratureConfig = None) -> float:
    """Reference Voigt function K(x, y)"""
    return ReferenceOracle(cfg).k_reference(arg)


def l_reference(arg: ComplexArgument, cfg: QuadratureConfig = None) -> float:
    """Reference L-function L(x, y)"""
    return ReferenceOracle(cfg).l_reference(arg)


def w_reference(arg: ComplexArgument, cfg: QuadratureConfig = None) -> FaddeevaValue:
    """Reference complex error function w(x, y) = K + iL"""
    return ReferenceOracle(cfg).w_reference(arg)


def cached_oracle(cfg: QuadratureConfig = None, max_size=None) -> ReferenceOracle:
    """Oracle with a fresh bounded memo attached"""
    cache = CacheManager() if max_size is None else CacheManager(max_size=max_size)
    return ReferenceOracle(cfg, cache=cache)
