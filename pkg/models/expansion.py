"""
Exponential-damping expansion of the Gaussian kernel
"""
import math
from dataclasses import dataclass
from typing import Tuple

from utils.errors import DomainError


@dataclass(frozen=True)
class KernelExpansion:
    """Coefficient pairs (alpha_n, beta_n); term n is alpha_n |t|^n exp(-beta_n |t|).

    The position of a pair in `terms` is the power of |t| it multiplies.
    """

    terms: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        terms = tuple((float(alpha), float(beta)) for alpha, beta in self.terms)
        if not terms:
            raise DomainError("❌ Kernel expansion needs at least one term")
        for n, (alpha, beta) in enumerate(terms):
            if not (math.isfinite(alpha) and math.isfinite(beta)):
                raise DomainError(f"❌ Term {n} has non-finite coefficients ({alpha!r}, {beta!r})")
            if beta <= 0:
                raise DomainError(f"❌ Term {n} does not decay: beta={beta!r} must be > 0")
        object.__setattr__(self, "terms", terms)

    @property
    def n_terms(self):
        return len(self.terms)

    @property
    def alphas(self):
        return [alpha for alpha, _ in self.terms]

    @property
    def betas(self):
        return [beta for _, beta in self.terms]

    def to_records(self):
        """Rows (n, alpha, beta) for tabular output"""
        return [{"n": n, "alpha": alpha, "beta": beta} for n, (alpha, beta) in enumerate(self.terms)]


PUBLISHED_COEFFICIENTS = KernelExpansion(terms=((1.0, 5.5), (5.5, 2.75)))
