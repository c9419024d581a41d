"""
Pseudo-Voigt Service - closed-form rational approximation of w = K + iL

Evaluation order is fixed so scalar, pair and array paths agree bit for bit:

    x2  = x*x
    a   = y + gamma          d1 = x2 + a*a
    b   = 2*y + gamma        d2 = 4*x2 + b*b,   d2sq = d2*d2
    K   = (a/d1 + 4*gamma*(b*b - 4*x2)/d2sq) / sqrt(pi)
    L   = (x * (1/d1 + 16*gamma*b/d2sq)) / sqrt(pi)

Every denominator contains gamma^2 > 0, so no point of y >= 0 is singular.
"""
import math

import numpy as np

from models.arguments import ComplexArgument, FaddeevaValue, PseudoVoigtParams
from utils.errors import DomainError
from utils.helpers import require_finite

SQRT_PI = math.sqrt(math.pi)
SQRT_LN2 = math.sqrt(math.log(2.0))


def _rational_parts(x, y, gamma):
    x2 = x * x
    a = y + gamma
    b = 2.0 * y + gamma
    b2 = b * b
    d1 = x2 + a * a
    d2 = 4.0 * x2 + b2
    d2sq = d2 * d2
    k = (a / d1 + 4.0 * gamma * (b2 - 4.0 * x2) / d2sq) / SQRT_PI
    l = (x * (1.0 / d1 + 16.0 * gamma * b / d2sq)) / SQRT_PI
    return k, l


def _params(p):
    return p if p is not None else PseudoVoigtParams()


def voigt_k_approx(arg: ComplexArgument, p: PseudoVoigtParams = None) -> float:
    """Rational pseudo-Voigt approximation of K(x, y)"""
    k, _ = _rational_parts(arg.x, arg.y, _params(p).gamma)
    return k


def voigt_l_approx(arg: ComplexArgument, p: PseudoVoigtParams = None) -> float:
    """Rational approximation of the L-function L(x, y)"""
    _, l = _rational_parts(arg.x, arg.y, _params(p).gamma)
    return l


def faddeeva_approx(arg: ComplexArgument, p: PseudoVoigtParams = None) -> FaddeevaValue:
    """Both parts from one pass over the shared subexpressions"""
    k, l = _rational_parts(arg.x, arg.y, _params(p).gamma)
    return FaddeevaValue(re=k, im=l)


def faddeeva_approx_array(x, y, p: PseudoVoigtParams = None):
    """Vectorized (K, L) over broadcastable arrays of x and y >= 0"""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    require_finite("x", x)
    require_finite("y", y)
    if np.any(y < 0):
        raise DomainError("❌ y must be >= 0 (upper half-plane only)")
    return _rational_parts(x, y, _params(p).gamma)


def voigt_line_profile(nu, nu0, doppler_hwhm, lorentz_hwhm, p: PseudoVoigtParams = None):
    """Area-normalized Voigt line shape built on the approximate K.

    x = sqrt(ln2) (nu - nu0) / doppler_hwhm, y = sqrt(ln2) lorentz_hwhm / doppler_hwhm,
    profile = sqrt(ln2 / pi) / doppler_hwhm * K(x, y).
    """
    if not np.isfinite(doppler_hwhm) or doppler_hwhm <= 0:
        raise DomainError(f"❌ Doppler HWHM must be > 0, got {doppler_hwhm!r}")
    if not np.isfinite(lorentz_hwhm) or lorentz_hwhm < 0:
        raise DomainError(f"❌ Lorentz HWHM must be >= 0, got {lorentz_hwhm!r}")
    nu = np.asarray(nu, dtype=float)
    x = SQRT_LN2 * (nu - nu0) / doppler_hwhm
    y = SQRT_LN2 * lorentz_hwhm / doppler_hwhm
    k, _ = faddeeva_approx_array(x, y, p)
    return SQRT_LN2 / (SQRT_PI * doppler_hwhm) * k
