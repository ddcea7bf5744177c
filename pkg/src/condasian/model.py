"""Contract and model parameters, and the derived spectral constants.

All transform formulas share a handful of derived quantities: the
drift-related exponents nu, mu, kappa of the log-price, and per-transform-
point square-root exponents eta, lambda, lambda0, rho.  They are computed
here once, exactly as defined, so every module agrees on conventions.
"""

import cmath
from dataclasses import dataclass

from .errors import ValidationError


@dataclass(frozen=True)
class MarketParams:
    """Black-Scholes market and contract terms.

    r       risk-free rate (per year)
    sigma   volatility (per sqrt-year), > 0
    x       spot price, > 0
    b       observation barrier (prices at or below b are excluded), >= 0
    strike  fixed strike K, > 0
    maturity  T in years, > 0
    """

    r: float
    sigma: float
    x: float
    b: float
    strike: float
    maturity: float

    def __post_init__(self):
        if not self.sigma > 0.0:
            raise ValidationError("sigma must be > 0", field="sigma")
        if not self.x > 0.0:
            raise ValidationError("x must be > 0", field="x")
        if not self.strike > 0.0:
            raise ValidationError("strike must be > 0", field="strike")
        if not self.maturity > 0.0:
            raise ValidationError("maturity must be > 0", field="maturity")
        if self.b < 0.0:
            raise ValidationError("b must be >= 0", field="b")
        if self.b > 0.0 and not self.b < self.strike:
            raise ValidationError(
                "conditional contract requires b < strike (the payoff "
                "integral over (b, K] is empty otherwise)", field="b")


@dataclass(frozen=True)
class Dimensionless:
    """Drift exponents of the time-changed log price.

    nu = 2r/sigma^2 - 1, mu = nu - 1, kappa = (1 - nu)/2.
    """

    nu: float
    mu: float
    kappa: float


def derive(params: MarketParams) -> Dimensionless:
    """Dimensionless drift constants for a given parameter set."""
    nu = 2.0 * params.r / params.sigma ** 2 - 1.0
    return Dimensionless(nu=nu, mu=nu - 1.0, kappa=0.5 * (1.0 - nu))


@dataclass(frozen=True)
class SpectralConstants:
    """Square-root exponents entering the transform formulas.

    eta     = sqrt(2 s + nu^2)/2            (density transform exponent)
    lam     = sqrt((mu+1)^2 + 8 (s+alpha)/sigma^2)   (Bessel order)
    lam0    = lam at alpha = 0
    rho     = -(mu+1)/2 + lam0/2            (sub-barrier power exponent)
    """

    eta: complex
    lam: complex
    lam0: complex
    rho: complex


def spectral(dim: Dimensionless, sigma: float, s, alpha=0.0) -> SpectralConstants:
    """Spectral constants at transform point (s, alpha); principal roots."""
    s = complex(s)
    alpha = complex(alpha)
    eta = 0.5 * cmath.sqrt(2.0 * s + dim.nu ** 2)
    mu1 = dim.mu + 1.0
    lam = cmath.sqrt(mu1 * mu1 + 8.0 * (s + alpha) / sigma ** 2)
    lam0 = cmath.sqrt(mu1 * mu1 + 8.0 * s / sigma ** 2)
    rho = -0.5 * mu1 + 0.5 * lam0
    return SpectralConstants(eta=eta, lam=lam, lam0=lam0, rho=rho)


@dataclass(frozen=True)
class TransformPoint:
    """A (s, alpha, beta) triple at which the joint transform is evaluated.

    The distribution-recovery path uses real s > 0 with alpha = i tau z and
    beta = -i tau for tau >= 0.
    """

    s: complex
    alpha: complex
    beta: complex

    @classmethod
    def ray(cls, s, z, tau):
        """Transform point on the ratio-inversion ray (s, i tau z, -i tau)."""
        return cls(s=complex(s), alpha=complex(0.0, tau * z),
                   beta=complex(0.0, -tau))
