"""
Evaluation points, parameters and results of the complex error function
"""
import math
from dataclasses import dataclass

from config import ABS_TOL, GAMMA, MAX_SUBDIVISIONS, T_UPPER
from utils.errors import DomainError


@dataclass(frozen=True)
class ComplexArgument:
    """The point z = x + iy, restricted to the closed upper half-plane"""

    x: float
    y: float

    def __post_init__(self):
        x, y = float(self.x), float(self.y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise DomainError(f"❌ x and y must be finite, got x={x!r}, y={y!r}")
        if y < 0:
            raise DomainError(f"❌ y must be >= 0 (upper half-plane only), got y={y!r}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)


@dataclass(frozen=True)
class PseudoVoigtParams:
    """Damping constant of the rational approximation"""

    gamma: float = GAMMA

    def __post_init__(self):
        gamma = float(self.gamma)
        if not math.isfinite(gamma) or gamma <= 0:
            raise DomainError(f"❌ gamma must be finite and > 0, got {gamma!r}")
        object.__setattr__(self, "gamma", gamma)


@dataclass(frozen=True)
class FaddeevaValue:
    """w = K + iL as a (real, imaginary) pair"""

    re: float
    im: float

    def to_complex(self):
        return complex(self.re, self.im)


@dataclass(frozen=True)
class QuadratureConfig:
    """Truncation and tolerance settings of the reference quadrature"""

    t_upper: float = T_UPPER
    abs_tol: float = ABS_TOL
    max_subdivisions: int = MAX_SUBDIVISIONS

    def __post_init__(self):
        if not self.t_upper >= 40:
            raise DomainError(f"❌ t_upper must be >= 40, got {self.t_upper!r}")
        if not 0 < self.abs_tol <= 1e-9:
            raise DomainError(f"❌ abs_tol must lie in (0, 1e-9], got {self.abs_tol!r}")
        if int(self.max_subdivisions) != self.max_subdivisions or self.max_subdivisions < 1:
            raise DomainError(f"❌ max_subdivisions must be an integer >= 1, got {self.max_subdivisions!r}")
        object.__setattr__(self, "t_upper", float(self.t_upper))
        object.__setattr__(self, "abs_tol", float(self.abs_tol))
        object.__setattr__(self, "max_subdivisions", int(self.max_subdivisions))

    def as_dict(self):
        return {
            "t_upper": self.t_upper,
            "abs_tol": self.abs_tol,
            "max_subdivisions": self.max_subdivisions,
        }
