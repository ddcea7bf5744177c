"""Regular Asian put pricing via closed-form Laplace transforms.

The time-integral of the price process has a transition law whose Laplace
transform in time is known in closed form through Whittaker functions.  In
the normalized clock (time scaled by sigma^2/4, level scaled by 4x/sigma^2)
the density transform is

    p0~(s, y) = Gamma(eta-kappa+1/2)/Gamma(1+2 eta) 2^{-kappa} f_kappa(y),
    f_kappa(y) = y^{-kappa} exp(-1/(4y)) M_{kappa,eta}(1/(2y)),

and integrating once and twice in y gives the distribution transform P0~
and the double integral Q0~ used by the put price

    AP0 = e^{-rT}/T * Q(x, T, T K),
    Q(x, t, y) = (4x/sigma^2) Q0(sigma^2 t/4, sigma^2 y/(4x)).

Everything is evaluated in log space, so tiny y (where exp(-1/(4y))
underflows) and the large complex Bromwich nodes are handled uniformly.
The transforms are inverted with the Euler algorithm.
"""

import cmath
import math

from . import specfun
from .errors import InversionError
from .inversion import InversionSpec, invert_euler
from .model import MarketParams, derive, spectral

__all__ = [
    "f_kappa", "ptilde0", "ptilde_big0", "qtilde0", "ptilde_dx",
    "asian_put_price", "asian_call_via_parity", "asian_put_delta",
    "g0_distribution",
]


def log_f_kappa(kappa_eff, eta, y, ctl=None):
    """log of f_kappa(y) = y^-kappa exp(-1/4y) M_{kappa,eta}(1/(2y))."""
    w = 1.0 / (2.0 * y)
    return -complex(kappa_eff) * math.log(y) - 0.25 / y \
        + specfun.whittaker_m_log(kappa_eff, eta, w, ctl)


def f_kappa(kappa_eff, y, eta, ctl=None):
    """Whittaker-kernel factor of the density transform at level y > 0."""
    logv = log_f_kappa(kappa_eff, eta, y, ctl)
    if logv.real < -745.0:
        return 0.0 + 0.0j
    return cmath.exp(logv)


def ptilde0(s, y, dim, ctl=None):
    """Laplace transform (in normalized time) of the level density at y."""
    sp = spectral(dim, 1.0, s)  # eta only depends on s and nu
    eta = sp.eta
    kap = dim.kappa
    lg = specfun.log_gamma(eta - kap + 0.5) - specfun.log_gamma(1.0 + 2.0 * eta)
    logv = lg - kap * math.log(2.0) + log_f_kappa(kap, eta, y, ctl)
    if logv.real < -745.0:
        return 0.0 + 0.0j
    return cmath.exp(logv)


def ptilde_big0(s, y, dim, ctl=None):
    """Transform of the level distribution function at y (single integral)."""
    s = complex(s)
    eta = 0.5 * cmath.sqrt(2.0 * s + dim.nu ** 2)
    kap = dim.kappa
    a1 = eta + kap - 0.5
    a2 = eta - kap + 0.5
    lg = specfun.log_gamma(a2) - specfun.log_gamma(1.0 + 2.0 * eta)
    lf = lg - kap * math.log(2.0) + log_f_kappa(kap - 1.0, eta, y, ctl) \
        - cmath.log(a1)
    tail = cmath.exp(lf) if lf.real > -745.0 else 0.0
    return 1.0 / (2.0 * a1 * a2) - tail


def qtilde0(s, y, dim, ctl=None):
    """Transform of the integrated distribution at y (double integral)."""
    s = complex(s)
    eta = 0.5 * cmath.sqrt(2.0 * s + dim.nu ** 2)
    kap = dim.kappa
    a1 = eta + kap - 0.5
    a2 = eta - kap + 0.5
    a3 = eta + kap - 1.5
    a4 = eta - kap + 1.5
    lg = specfun.log_gamma(a2) - specfun.log_gamma(1.0 + 2.0 * eta)
    lf = lg - kap * math.log(2.0) + log_f_kappa(kap - 2.0, eta, y, ctl) \
        - cmath.log(a1 * a3)
    tail = cmath.exp(lf) if lf.real > -745.0 else 0.0
    return y / (2.0 * a1 * a2) - 1.0 / (4.0 * a1 * a3 * a4 * a2) + tail


# ---------------------------------------------------------------------------
# physical-clock transforms (Laplace variable conjugate to calendar time)
# ---------------------------------------------------------------------------

def qtilde_phys(params: MarketParams, s, y, ctl=None):
    """L_t[Q(x, ., y)](s): integrated-distribution transform, physical time."""
    sig2 = params.sigma ** 2
    dim = derive(params)
    return 16.0 * params.x / sig2 ** 2 \
        * qtilde0(4.0 * s / sig2, sig2 * y / (4.0 * params.x), dim, ctl)


def ptilde_phys(params: MarketParams, s, y, ctl=None):
    """L_t[P(x, ., y)](s): distribution transform, physical time."""
    sig2 = params.sigma ** 2
    dim = derive(params)
    return 4.0 / sig2 * ptilde_big0(4.0 * s / sig2, sig2 * y / (4.0 * params.x),
                                    dim, ctl)


def ptilde_dx(params: MarketParams, s, y, ctl=None):
    """d/dx of the distribution transform at level y, physical time."""
    sig2 = params.sigma ** 2
    dim = derive(params)
    return -(y / params.x ** 2) * 4.0 / sig2 \
        * ptilde0(4.0 * s / sig2, sig2 * y / (4.0 * params.x), dim, ctl)


def qtilde_dx_phys(params: MarketParams, s, y, ctl=None):
    """d/dx of the integrated-distribution transform, physical time."""
    sig2 = params.sigma ** 2
    dim = derive(params)
    ybar = sig2 * y / (4.0 * params.x)
    sbar = 4.0 * s / sig2
    return 16.0 / sig2 ** 2 * qtilde0(sbar, ybar, dim, ctl) \
        - (y / params.x) * 4.0 / sig2 * ptilde_big0(sbar, ybar, dim, ctl)


# ---------------------------------------------------------------------------
# prices, deltas, distribution values
# ---------------------------------------------------------------------------

def asian_put_price(params: MarketParams, inv: InversionSpec = None) -> float:
    """Fixed-strike Asian put price by Euler inversion of the Q transform."""
    inv = inv or InversionSpec()
    t = params.maturity
    y = t * params.strike
    q = invert_euler(lambda s: qtilde_phys(params, s, y), t, inv.euler_terms)
    price = math.exp(-params.r * t) / t * q
    if not math.isfinite(price):
        raise InversionError("Asian put inversion produced a non-finite value")
    return price


def asian_call_via_parity(params: MarketParams, put: float) -> float:
    """Asian call obtained from the put through fixed-strike parity.

    call - put = e^{-rT} (E[average] - K) with E[average] =
    x (e^{rT}-1)/(rT), continued to x at r = 0.
    """
    r, t = params.r, params.maturity
    if abs(r) < 1e-12:
        mean_avg = params.x * (1.0 + 0.5 * r * t)
    else:
        mean_avg = params.x * (math.exp(r * t) - 1.0) / (r * t)
    return put + math.exp(-r * t) * (mean_avg - params.strike)


def asian_put_delta(params: MarketParams, inv: InversionSpec = None) -> float:
    """Delta of the Asian put via the differentiated transform."""
    inv = inv or InversionSpec()
    t = params.maturity
    y = t * params.strike
    dq = invert_euler(lambda s: qtilde_dx_phys(params, s, y), t, inv.euler_terms)
    delta = math.exp(-params.r * t) / t * dq
    if not math.isfinite(delta):
        raise InversionError("Asian delta inversion produced a non-finite value")
    return delta


def g0_distribution(params: MarketParams, z: float, t: float,
                    inv: InversionSpec = None) -> float:
    """P(average over [0,t] <= z) for the unconditional average.

    Inverts the distribution transform at level y = t z; values are clamped
    to [0, 1] only within a 1e-6 overshoot, larger excursions indicate lost
    precision and raise.
    """
    if z <= 0.0:
        return 0.0
    inv = inv or InversionSpec()
    g = invert_euler(lambda s: ptilde_phys(params, s, t * z), t,
                     inv.euler_terms)
    if not math.isfinite(g):
        raise InversionError("distribution inversion produced a non-finite value")
    if g < 0.0:
        if g < -1e-6:
            raise InversionError(
                "distribution value %g undershoots 0 beyond tolerance" % g)
        g = 0.0
    elif g > 1.0:
        if g > 1.0 + 1e-6:
            raise InversionError(
                "distribution value %g overshoots 1 beyond tolerance" % g)
        g = 1.0
    return g


def g0_dx(params: MarketParams, z: float, t: float,
          inv: InversionSpec = None) -> float:
    """d/dx of the unconditional average distribution at level z."""
    if z <= 0.0:
        return 0.0
    inv = inv or InversionSpec()
    return invert_euler(lambda s: ptilde_dx(params, s, t * z), t,
                        inv.euler_terms)
