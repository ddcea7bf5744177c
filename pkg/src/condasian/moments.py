"""First moments of the occupation pair and the small-frequency expansion
of the ratio characteristic function.

On the ray (alpha, beta) = (i tau z, -i tau) the scaled transform
s F(b, x, s, i tau z, -i tau) is the characteristic function of
W = V - z U at the exponential horizon; its expansion

    s F = 1 + E1 tau + O(tau^2)

yields E[W] = E1/i and closed-form E[U], E[V] by matching powers of z.
The same coefficient gives the tau -> 0 limit of the spread integrand,
which would otherwise be a 0/0 evaluation at the quadrature endpoint.
"""

import math
from dataclasses import dataclass

from .errors import ValidationError
from .model import MarketParams, derive, spectral

__all__ = ["MomentSet", "mean_uv", "e1_coefficient", "phi_ray_limit",
           "phi_ray_limit_dx", "e_k_numeric"]


@dataclass(frozen=True)
class MomentSet:
    """First moments at an exponential horizon of rate s.

    mean_u is the expected time spent above the barrier (years), mean_v the
    expected price-weighted time (currency * years); e1 is the first
    expansion coefficient of the ratio characteristic function when a ratio
    level z was supplied, else None.
    """

    mean_u: float
    mean_v: float
    e1: complex = None


def _check_s(params, s):
    if not s > 0.0:
        raise ValidationError("exponential rate s must be positive", field="s")
    if not s > params.r:
        raise ValidationError(
            "moment formulas require s > r (expansion validity)", field="s")


def _psi_above(params, lam0, mu):
    # (x/b)^{-(mu+lam0+1)/2}, the barrier attenuation factor for x >= b
    return math.exp(-0.5 * (mu + lam0 + 1.0) * math.log(params.x / params.b))


def mean_uv(params: MarketParams, s: float) -> MomentSet:
    """Closed-form E[U], E[V] at an exponential horizon, both spot branches."""
    _check_s(params, s)
    dim = derive(params)
    sp = spectral(dim, params.sigma, s, 0.0)
    lam0 = sp.lam0.real
    rho = sp.rho.real
    mu = dim.mu
    r = params.r
    x, b = params.x, params.b
    if b == 0.0:
        return MomentSet(mean_u=1.0 / s, mean_v=x / (s - r))
    if x >= b:
        psi = _psi_above(params, lam0, mu)
        mean_v = b * (rho - 1.0) / ((r - s) * lam0) * psi - x / (r - s)
        mean_u = 1.0 / s - rho / (lam0 * s) * psi
    else:
        q = math.exp(rho * math.log(x / b))
        mean_u = (mu + lam0 + 1.0) / (2.0 * lam0 * s) * q
        # matching the x >= b branch at x = b fixes the numerator constant
        # at mu + lam0 + 3 (the printed source differs by a sign slip)
        mean_v = b * (mu + lam0 + 3.0) / (2.0 * (s - r) * lam0) * q
    return MomentSet(mean_u=mean_u, mean_v=mean_v)


def e1_coefficient(params: MarketParams, s: float, z: float) -> complex:
    """First expansion coefficient E1 of the ratio characteristic function."""
    _check_s(params, s)
    dim = derive(params)
    sp = spectral(dim, params.sigma, s, 0.0)
    lam0 = sp.lam0.real
    rho = sp.rho.real
    mu = dim.mu
    r = params.r
    x, b = params.x, params.b
    drift_term = x / (r - s) + z / s
    if b == 0.0:
        return -1j * drift_term
    if x >= b:
        psi = _psi_above(params, lam0, mu)
        return 1j * ((b / (r - s) + z / s) * rho - b / (r - s)) * psi / lam0 \
            - 1j * drift_term
    q = math.exp(rho * math.log(x / b))
    return -1j * ((b / (r - s) + z / s) * 0.5 * (mu + lam0 + 1.0)
                  + b / (r - s)) * q / lam0


def phi_ray_limit(params: MarketParams, s: float, z: float) -> float:
    """tau -> 0 limit of (1/tau) Im Phi(b, x, s, i tau z, -i tau).

    Equals (E1 - A1)/(i s) where A1 is the barrier-free coefficient; the
    barrier-free parts cancel, leaving the attenuated term only.
    """
    _check_s(params, s)
    if params.b == 0.0:
        return 0.0
    dim = derive(params)
    sp = spectral(dim, params.sigma, s, 0.0)
    lam0 = sp.lam0.real
    rho = sp.rho.real
    mu = dim.mu
    r = params.r
    x, b = params.x, params.b
    if x >= b:
        psi = _psi_above(params, lam0, mu)
        return ((b / (r - s) + z / s) * rho - b / (r - s)) * psi / (lam0 * s)
    q = math.exp(rho * math.log(x / b))
    core = -((b / (r - s) + z / s) * 0.5 * (mu + lam0 + 1.0)
             + b / (r - s)) * q / lam0
    return (core + x / (r - s) + z / s) / s


def phi_ray_limit_dx(params: MarketParams, s: float, z: float) -> float:
    """x-derivative of :func:`phi_ray_limit`."""
    _check_s(params, s)
    if params.b == 0.0:
        return 0.0
    dim = derive(params)
    sp = spectral(dim, params.sigma, s, 0.0)
    lam0 = sp.lam0.real
    rho = sp.rho.real
    mu = dim.mu
    r = params.r
    x, b = params.x, params.b
    if x >= b:
        return phi_ray_limit(params, s, z) * (-0.5 * (mu + lam0 + 1.0) / x)
    q = math.exp(rho * math.log(x / b))
    core = -((b / (r - s) + z / s) * 0.5 * (mu + lam0 + 1.0)
             + b / (r - s)) * q * rho / (x * lam0)
    return (core + 1.0 / (r - s)) / s


def e_k_numeric(params: MarketParams, s: float, z: float, k: int,
                h: float = 1e-3) -> complex:
    """Numerical expansion coefficient E_k by Richardson-extrapolated
    derivatives of the characteristic function in tau.

    Testing aid only: higher closed-form coefficients are out of scope.
    """
    from .joint import f_full
    from .model import TransformPoint

    def char_fn(tau):
        if tau == 0.0:
            return 1.0 + 0.0j
        tp = TransformPoint.ray(s, z, tau)
        return s * f_full(params.b, params.x, tp, params)

    def deriv_est(step):
        if k == 1:
            return (char_fn(step) - char_fn(-step)) / (2.0 * step)
        if k == 2:
            return (char_fn(step) - 2.0 * char_fn(0.0) + char_fn(-step)) \
                / step ** 2
        raise ValidationError("e_k_numeric supports k in {1, 2}")

    d1 = deriv_est(h)
    d2 = deriv_est(h / 2.0)
    rich = (4.0 * d2 - d1) / 3.0
    return rich / math.factorial(k)
