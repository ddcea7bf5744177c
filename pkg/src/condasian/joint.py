"""Joint Laplace transform of the occupation pair (time above the barrier,
price-weighted time above the barrier) at an exponential horizon.

With F(b, x, s, alpha, beta) = E_x[exp(-alpha U - beta V)]/s at an
independent exponential time of rate s, F solves a piecewise ODE in the
spot x.  Above the barrier the bounded solution splits as

    F = Phi + Y,      Y(x) = F(0, x, s, alpha, beta),

where Y has a closed form through an entire 1F2 series plus a
gamma-weighted Bessel-I term, and Phi is proportional to the decaying
fundamental solution F2(x) = x^{-(1+mu)/2} K_lam(u(x)) with matching
coefficients at x = b:

    Phi = [rho (1/s - Y(b)) + b Y'(b)] / [rho F2(b) - b F2'(b)] * F2(x).

Below the barrier F = B x^rho + 1/s.  This module evaluates all of those
pieces with log-scaled Bessel values, switches Y to its large-frequency
expansion sum_k A_k(x)/tau^{k+1} when the series becomes uneconomical, and
escalates to arbitrary precision when the two summands of Y cancel beyond
repair in double precision (which happens for real transform arguments,
not on the distribution-recovery ray).
"""

import cmath
import math
from dataclasses import dataclass

from . import specfun
from .errors import CancellationError, NumericalError, TruncationError
from .model import MarketParams, TransformPoint, derive, spectral

__all__ = [
    "OdeSolutionPair", "TailEstimate", "fundamental_pair", "y_open",
    "y_open_deriv", "y_asymptotic", "y_asymptotic_deriv", "phi", "phi_dx",
    "f_full", "phi_tail", "tail_envelope", "tail_truncation_point",
    "y0_limit", "phi0_limit", "PhiEvaluator",
]

_ESCALATE_DIGITS = 6.0


@dataclass(frozen=True)
class OdeSolutionPair:
    """Fundamental solutions of the homogeneous ODE at a spot value."""

    f1: complex
    f2: complex
    f2_deriv: complex


@dataclass(frozen=True)
class TailEstimate:
    """Large-frequency envelope of the ratio-ray integrand.

    The integrand (1/tau) Im Phi behaves like
    |amplitude| * tau^power * exp(-Re(decay_a) sqrt(tau)).
    """

    amplitude: complex
    decay_a: complex
    power: float


def _constants(params: MarketParams, tp: TransformPoint):
    dim = derive(params)
    sp = spectral(dim, params.sigma, tp.s, tp.alpha)
    return dim.mu, sp.lam, sp.lam0, sp.rho


def _u_of(params: MarketParams, beta, xv):
    return 2.0 / params.sigma * cmath.sqrt(2.0 * beta * xv)


def fundamental_pair(xv, tp: TransformPoint, params: MarketParams,
                     ctl=None) -> OdeSolutionPair:
    """Fundamental solutions F1 (growing), F2 (decaying) and F2' at x."""
    mu, lam, lam0, rho = _constants(params, tp)
    u = _u_of(params, tp.beta, xv)
    li, _ = specfun.besseli_log(lam, u, ctl)
    lk, _ = specfun.besselk_log(lam, u, ctl)
    lk1, _ = specfun.besselk_log(lam + 1.0, u, ctl)
    lx = math.log(xv)
    f1 = cmath.exp(-0.5 * (1.0 + mu) * lx + li)
    f2 = cmath.exp(-0.5 * (1.0 + mu) * lx + lk)
    f2d = 0.5 * (lam - mu - 1.0) * cmath.exp(-0.5 * (3.0 + mu) * lx + lk) \
        - cmath.sqrt(2.0 * tp.beta) / params.sigma \
        * cmath.exp(-0.5 * (2.0 + mu) * lx + lk1)
    return OdeSolutionPair(f1=f1, f2=f2, f2_deriv=f2d)


# ---------------------------------------------------------------------------
# Y = F(0, x, .) : closed form and large-frequency expansion
# ---------------------------------------------------------------------------

def _y_open_mp(xv, tp, params, dps):
    """Arbitrary-precision evaluation of the closed form of Y."""
    import mpmath as mpm
    with mpm.mp.workdps(min(int(dps), 400)):
        sig = mpm.mpf(repr(params.sigma))
        r = mpm.mpf(repr(params.r))
        s = mpm.mpc(tp.s)
        alpha = mpm.mpc(tp.alpha)
        beta = mpm.mpc(tp.beta)
        x = mpm.mpf(repr(float(xv)))
        mu = 2 * r / sig ** 2 - 2
        lam = mpm.sqrt((mu + 1) ** 2 + 8 * (s + alpha) / sig ** 2)
        t1 = mpm.hyper([1], [(mu - lam + 3) / 2, (mu + lam + 3) / 2],
                       2 * beta * x / sig ** 2) / (s + alpha)
        u = 2 / sig * mpm.sqrt(2 * beta * x)
        t2 = (2 / sig ** 2) * mpm.gamma((mu - lam + 1) / 2) \
            * mpm.gamma((mu + lam + 1) / 2) \
            * (mpm.sqrt(2 * beta) / sig) ** (-1 - mu) \
            * x ** (-(1 + mu) / 2) * mpm.besseli(lam, u)
        return complex(t1 + t2)


def _y_open_mp_deriv(xv, tp, params, dps):
    """Arbitrary-precision d/dx of Y, differentiated at working precision."""
    import mpmath as mpm
    with mpm.mp.workdps(min(int(dps) + 10, 400)):
        sig = mpm.mpf(repr(params.sigma))
        r = mpm.mpf(repr(params.r))
        s = mpm.mpc(tp.s)
        alpha = mpm.mpc(tp.alpha)
        beta = mpm.mpc(tp.beta)
        mu = 2 * r / sig ** 2 - 2
        lam = mpm.sqrt((mu + 1) ** 2 + 8 * (s + alpha) / sig ** 2)

        def y_of(x):
            t1 = mpm.hyper([1], [(mu - lam + 3) / 2, (mu + lam + 3) / 2],
                           2 * beta * x / sig ** 2) / (s + alpha)
            u = 2 / sig * mpm.sqrt(2 * beta * x)
            t2 = (2 / sig ** 2) * mpm.gamma((mu - lam + 1) / 2) \
                * mpm.gamma((mu + lam + 1) / 2) \
                * (mpm.sqrt(2 * beta) / sig) ** (-1 - mu) \
                * x ** (-(1 + mu) / 2) * mpm.besseli(lam, u)
            return t1 + t2

        return complex(mpm.diff(y_of, mpm.mpf(repr(float(xv)))))


def y_open(xv, tp: TransformPoint, params: MarketParams, ctl=None,
           escalate=True):
    """Closed-form Y(x) = F(0, x, s, alpha, beta).

    Entire 1F2 series over (s+alpha) plus the gamma-weighted growing
    solution.  The two summands can cancel catastrophically (they do for
    real alpha, beta of moderate size); the combined diagnostic triggers an
    arbitrary-precision retry, or :class:`CancellationError` when
    ``escalate=False``.
    """
    if tp.alpha == 0 and tp.beta == 0:
        return 1.0 / tp.s
    mu, lam, lam0, rho = _constants(params, tp)
    sig = params.sigma
    ctl = ctl or specfun._WIDE_CONTROL
    res = specfun.hyp1f2(0.5 * (mu - lam + 3.0), 0.5 * (mu + lam + 3.0),
                         2.0 * tp.beta * xv / sig ** 2, ctl)
    term1 = res.value / (tp.s + tp.alpha)
    u = _u_of(params, tp.beta, xv)
    li, ierr = specfun.besseli_log(lam, u, ctl)
    lt2 = math.log(2.0 / sig ** 2) \
        + specfun.log_gamma(0.5 * (mu - lam + 1.0)) \
        + specfun.log_gamma(0.5 * (mu + lam + 1.0)) \
        + (-1.0 - mu) * cmath.log(cmath.sqrt(2.0 * tp.beta) / sig) \
        - 0.5 * (1.0 + mu) * math.log(xv) + li
    term2 = cmath.exp(lt2) if lt2.real > -745.0 else 0.0
    y = term1 + term2
    big = max(res.max_term / abs(tp.s + tp.alpha), abs(term2), abs(term1))
    digits = math.inf if y == 0 else max(0.0, math.log10(big / abs(y)))
    if digits > _ESCALATE_DIGITS:
        if not escalate:
            raise CancellationError(
                "Y closed form lost %.1f digits; arbitrary precision needed"
                % digits, digits_lost=digits)
        return _y_open_mp(xv, tp, params, 26 + digits)
    return y


def y_open_deriv(xv, tp: TransformPoint, params: MarketParams, ctl=None,
                 escalate=True):
    """d/dx of the closed-form Y, term-by-term."""
    if tp.alpha == 0 and tp.beta == 0:
        return 0.0 + 0.0j
    mu, lam, lam0, rho = _constants(params, tp)
    sig = params.sigma
    ctl = ctl or specfun._WIDE_CONTROL
    c = 2.0 * tp.beta / sig ** 2
    res = specfun.hyp1f2_dz(0.5 * (mu - lam + 3.0), 0.5 * (mu + lam + 3.0),
                            c * xv, ctl)
    term1 = c * res.value / (tp.s + tp.alpha)
    u = _u_of(params, tp.beta, xv)
    li, e1 = specfun.besseli_log(lam, u, ctl)
    li1, e2 = specfun.besseli_log(lam + 1.0, u, ctl)
    big = max(li.real, li1.real)
    inner = 0.5 * (lam - mu - 1.0) * cmath.exp(li - big) \
        + 0.5 * u * cmath.exp(li1 - big)
    lf1p = -0.5 * (3.0 + mu) * math.log(xv) + big + cmath.log(inner)
    lt2 = math.log(2.0 / sig ** 2) \
        + specfun.log_gamma(0.5 * (mu - lam + 1.0)) \
        + specfun.log_gamma(0.5 * (mu + lam + 1.0)) \
        + (-1.0 - mu) * cmath.log(cmath.sqrt(2.0 * tp.beta) / sig) + lf1p
    term2 = cmath.exp(lt2) if lt2.real > -745.0 else 0.0
    yp = term1 + term2
    big_t = max(abs(c) * res.max_term / abs(tp.s + tp.alpha), abs(term2),
                abs(term1))
    digits = math.inf if yp == 0 else max(0.0, math.log10(big_t / abs(yp)))
    if digits > _ESCALATE_DIGITS:
        if not escalate:
            raise CancellationError(
                "Y' closed form lost %.1f digits" % digits, digits_lost=digits)
        return _y_open_mp_deriv(xv, tp, params, 26 + digits)
    return yp


# -- large-frequency expansion of Y on the ray (alpha, beta) = (i tau z, -i tau)
#
# The coefficients A_k(x) are rational functions with poles only at the
# turning point x = z, generated by
#
#     A_0 = 1/(i(z-x)),
#     A_{k+1} = (sigma^2 x^2 A_k''/2 + r x A_k' - s A_k) / (i (z - x)).
#
# They are carried as truncated Taylor jets at the evaluation point, which
# keeps the recursion exact (each step consumes two jet orders for the
# second derivative) without symbolic expression swell.

def _jet_mul(a, b, n):
    out = [0.0 + 0.0j] * n
    for i, ai in enumerate(a[:n]):
        if ai == 0.0:
            continue
        top = min(n - i, len(b))
        for j in range(top):
            out[i + j] += ai * b[j]
    return out


def _jet_div(a, b, n):
    # c = a / b with b[0] != 0
    out = [0.0 + 0.0j] * n
    inv0 = 1.0 / b[0]
    for i in range(n):
        acc = a[i] if i < len(a) else 0.0 + 0.0j
        top = min(i, len(b) - 1)
        for j in range(1, top + 1):
            acc -= b[j] * out[i - j]
        out[i] = acc * inv0
    return out


def _jet_deriv(a):
    return [a[j + 1] * (j + 1.0) for j in range(len(a) - 1)]


def _asy_coeff_jets(x0, z, s, params, order):
    """Taylor jets (around x0) of A_0..A_order on the ray."""
    n0 = 2 * order + 3
    sc = complex(s)
    sig2h = 0.5 * params.sigma ** 2
    r = params.r
    div = [1j * (z - x0), -1j]          # i (z - x) as a jet in h = x - x0
    xsq = [x0 * x0, 2.0 * x0, 1.0]      # x^2
    xlin = [complex(x0), 1.0 + 0.0j]    # x
    jets = []
    a = _jet_div([1.0 + 0.0j], div, n0)
    jets.append(a)
    for k_ in range(order):
        n = n0 - 2 * (k_ + 1)
        ad = _jet_deriv(a)
        add = _jet_deriv(ad)
        rhs = [0.0 + 0.0j] * n
        t1 = _jet_mul(xsq, add, n)
        t2 = _jet_mul(xlin, ad, n)
        for i in range(n):
            rhs[i] = sig2h * t1[i] + r * t2[i] - sc * a[i]
        a = _jet_div(rhs, div, n)
        jets.append(a)
    return jets


def y_asymptotic(xv, z, tau, s, params: MarketParams, order=6):
    """Large-tau expansion of Y on the ray: sum_{k<=order} A_k(x)/tau^{k+1}."""
    if abs(z - xv) < 1e-3 * abs(xv):
        raise NumericalError(
            "large-frequency expansion of Y breaks down at the turning "
            "point z = x")
    jets = _asy_coeff_jets(xv, z, s, params, order)
    total = 0.0 + 0.0j
    invtau = 1.0 / tau
    w = invtau
    for a in jets:
        total += a[0] * w
        w *= invtau
    return total


def y_asymptotic_deriv(xv, z, tau, s, params: MarketParams, order=6):
    """x-derivative of :func:`y_asymptotic`."""
    if abs(z - xv) < 1e-3 * abs(xv):
        raise NumericalError(
            "large-frequency expansion of Y breaks down at the turning "
            "point z = x")
    jets = _asy_coeff_jets(xv, z, s, params, order)
    total = 0.0 + 0.0j
    invtau = 1.0 / tau
    w = invtau
    for a in jets:
        total += a[1] * w
        w *= invtau
    return total


def _y_asymptotic_sum_from_jets(jets, tau):
    """(Y, Y', relative error estimate) by adaptive truncation of the jets."""
    total = 0.0 + 0.0j
    total_d = 0.0 + 0.0j
    invtau = 1.0 / tau
    w = invtau
    prev = math.inf
    est = math.inf
    for a in jets:
        t = a[0] * w
        mag = abs(t)
        if mag >= prev:
            est = prev
            break
        total += t
        total_d += a[1] * w
        prev = mag
        est = mag
        w *= invtau
    rel = est / max(abs(total), 1e-300)
    return total, total_d, rel


# ---------------------------------------------------------------------------
# Phi and the full transform
# ---------------------------------------------------------------------------

def _phi_from_parts(bv, xv, tp, params, yb, ypb, want_dx=False, ctl=None):
    mu, lam, lam0, rho = _constants(params, tp)
    sig = params.sigma
    ub = _u_of(params, tp.beta, bv)
    ux = _u_of(params, tp.beta, xv)
    lkx, _ = specfun.besselk_log(lam, ux, ctl)
    lkb, _ = specfun.besselk_log(lam, ub, ctl)
    lk1b, _ = specfun.besselk_log(lam + 1.0, ub, ctl)
    sq2b = cmath.sqrt(2.0 * tp.beta) / sig
    second = sq2b * math.sqrt(bv) * cmath.exp(lk1b - lkb)
    denom = 0.5 * (lam0 - lam) + second
    if abs(denom) < 1e-12 * max(abs(0.5 * (lam0 - lam)), abs(second)):
        raise NumericalError(
            "matching denominator rho F2(b) - b F2'(b) vanished; report "
            "the parameter set (s=%r alpha=%r beta=%r)" %
            (tp.s, tp.alpha, tp.beta))
    n_match = rho * (1.0 / tp.s - yb) + bv * ypb
    ratio = cmath.exp(-0.5 * (1.0 + mu) * math.log(xv / bv) + lkx - lkb)
    value = n_match * ratio / denom
    if not want_dx:
        return value
    lk1x, _ = specfun.besselk_log(lam + 1.0, ux, ctl)
    f2ratio = 0.5 * (lam - mu - 1.0) / xv - sq2b / math.sqrt(xv) \
        * cmath.exp(lk1x - lkx)
    return value * f2ratio


def phi(bv, xv, tp: TransformPoint, params: MarketParams, ctl=None):
    """Barrier correction Phi = F(b, x, ...) - F(0, x, ...) for x >= b > 0."""
    if tp.alpha == 0 and tp.beta == 0:
        return 0.0 + 0.0j
    yb = y_open(bv, tp, params, ctl)
    ypb = y_open_deriv(bv, tp, params, ctl)
    return _phi_from_parts(bv, xv, tp, params, yb, ypb, False, ctl)


def phi_dx(bv, xv, tp: TransformPoint, params: MarketParams, ctl=None):
    """d/dx of Phi: same matching coefficient against F2'(x)."""
    if tp.alpha == 0 and tp.beta == 0:
        return 0.0 + 0.0j
    yb = y_open(bv, tp, params, ctl)
    ypb = y_open_deriv(bv, tp, params, ctl)
    return _phi_from_parts(bv, xv, tp, params, yb, ypb, True, ctl)


def f_full(bv, xv, tp: TransformPoint, params: MarketParams, ctl=None):
    """Joint transform F(b, x, s, alpha, beta) on both sides of the barrier.

    Above the barrier F = Phi + Y(x); below, F = B x^rho + 1/s with B fixed
    by continuity at x = b.  The construction keeps F once continuously
    differentiable across the barrier.
    """
    if bv <= 0.0:
        return y_open(xv, tp, params, ctl)
    if tp.alpha == 0 and tp.beta == 0:
        return 1.0 / tp.s
    if xv >= bv:
        return phi(bv, xv, tp, params, ctl) + y_open(xv, tp, params, ctl)
    mu, lam, lam0, rho = _constants(params, tp)
    fb = phi(bv, bv, tp, params, ctl) + y_open(bv, tp, params, ctl)
    bcoef = (fb - 1.0 / tp.s) * cmath.exp(-rho * math.log(bv))
    return bcoef * cmath.exp(rho * math.log(xv)) + 1.0 / tp.s


# ---------------------------------------------------------------------------
# tail envelope on the ray
# ---------------------------------------------------------------------------

def _xi_of(y):
    w2 = 1.0 + y * y
    W = cmath.sqrt(w2)
    if w2.real < 0.0 and W.imag > 0.0:
        W = -W
    return W + cmath.log(y / (1.0 + W)), W


def phi_tail(bv, xv, z, s, params: MarketParams, kind="value") -> TailEstimate:
    """Large-tau envelope of the ray integrand (1/tau) Im Phi.

    Derived from the uniform Bessel asymptotics: with y1 = -i sqrt(x/z)
    (below-axis root when z < x), y2 = -i sqrt(b/z),

        Phi ~ (rho/s)(x/b)^{-(1+mu)/2} sigma/sqrt(-2 i b tau)
              * y1 / ((1+y1^2)(1+y2^2))^{1/4} * exp(-lam (xi1 - xi2)),

    where lam = (2/sigma) sqrt(2 i z tau).  kind="dx" scales the envelope by
    the uniform estimate of F2'(x)/F2(x) (one extra sqrt(tau) power).
    """
    mu, lam, lam0, rho = _constants(
        params, TransformPoint(s=complex(s), alpha=0.0, beta=0.0))
    y1 = -1j * cmath.sqrt(xv / z)
    y2 = -1j * cmath.sqrt(bv / z)
    xi1, w1 = _xi_of(y1)
    xi2, w2 = _xi_of(y2)
    lam_unit = 2.0 / params.sigma * cmath.sqrt(2j * z)
    decay = lam_unit * (xi1 - xi2)
    if decay.real <= 0.0:
        raise TruncationError(
            "ray envelope does not decay (Re a = %g <= 0): branch error "
            "or b >= x" % decay.real)
    # near the turning point z = x the (1+y1^2)^{-1/4} factor diverges while
    # the true Bessel value saturates at its Airy-regime size; flooring the
    # factor keeps the envelope finite and conservative for truncation
    w1_amp = max(abs(w1), 0.02)
    w2_amp = max(abs(w2), 0.02)
    amp = (rho / complex(s)) * (xv / bv) ** (-0.5 * (1.0 + mu)) \
        * params.sigma / cmath.sqrt(2j * bv) \
        * y1 / math.sqrt(w1_amp * w2_amp)
    if kind == "dx":
        amp = amp * math.sqrt(2.0) / params.sigma / xv * max(abs(w1 / y1), 0.02)
        return TailEstimate(amplitude=amp, decay_a=decay, power=-1.0)
    return TailEstimate(amplitude=amp, decay_a=decay, power=-1.5)


def tail_envelope(est: TailEstimate, tau):
    """Envelope value |amp| tau^power exp(-Re a sqrt(tau))."""
    return abs(est.amplitude) * tau ** est.power \
        * math.exp(-est.decay_a.real * math.sqrt(tau))


def tail_truncation_point(est: TailEstimate, tol):
    """Truncation point a with bound(integral over (a, inf)) < tol.

    In v = sqrt(tau) the tail is 2|amp| int v^{2p+1} e^{-cv} dv with
    c = Re(decay_a); for the powers used here (p = -3/2, -1) the integrand
    is bounded by V^{2p+1} e^{-cv}, giving an explicit decreasing bound that
    is driven below tol.
    """
    c = est.decay_a.real
    if c <= 0.0:
        raise TruncationError("envelope decay constant is not positive")
    amp = abs(est.amplitude)
    if amp == 0.0:
        return 1.0
    expo = 2.0 * est.power + 1.0  # v-power under the integral
    v = max(2.0 / c, 1.0)
    for _ in range(200):
        bound = 2.0 * amp * v ** expo * math.exp(-c * v) / c
        if bound < tol:
            break
        v *= 1.25
    else:
        raise TruncationError("could not satisfy the tail bound")
    return max(v * v, 1.0)


# ---------------------------------------------------------------------------
# deterministic limit (sigma -> 0)
# ---------------------------------------------------------------------------

def y0_limit(xv, s, alpha, beta, r):
    """Zero-volatility limit of Y: Kummer closed form."""
    s = complex(s)
    alpha = complex(alpha)
    beta = complex(beta)
    if alpha == 0 and beta == 0:
        return 1.0 / s
    gamma_c = -(s + alpha) / r
    return specfun.kummer_m(1.0, gamma_c + 1.0, beta * xv / r) / (s + alpha)


def phi0_limit(bv, xv, s, alpha, beta, r):
    """Zero-volatility limit of Phi for r < 0 and 0 < b < x."""
    if not r < 0.0:
        raise NumericalError("the deterministic barrier correction requires r < 0")
    s = complex(s)
    alpha = complex(alpha)
    beta = complex(beta)
    gamma_c = -(s + alpha) / r
    m = specfun.kummer_m(1.0, gamma_c + 1.0, beta * bv / r)
    return cmath.exp(beta / r * (xv - bv)) \
        * cmath.exp(gamma_c * math.log(bv / xv)) * (1.0 / s - m / (s + alpha))


# ---------------------------------------------------------------------------
# fast ray evaluator for the quadratures
# ---------------------------------------------------------------------------

class PhiEvaluator:
    """Evaluates Phi and its x-derivative along the ray alpha = i tau z,
    beta = -i tau, for one fixed (params, s, z).

    Y(b) and Y'(b) switch from the series closed form to the rational
    large-frequency expansion once the series diagnostics or the argument
    size rule fire and the expansion's own error estimate is acceptable.
    """

    def __init__(self, params: MarketParams, s, z, ctl=None):
        self.params = params
        self.s = float(s)
        self.z = float(z)
        self.ctl = ctl or specfun._WIDE_CONTROL
        self.dim = derive(params)
        self.mu = self.dim.mu
        sp0 = spectral(self.dim, params.sigma, self.s, 0.0)
        self.lam0 = sp0.lam0
        self.rho = sp0.rho
        self._jets = _asy_coeff_jets(params.b, self.z, self.s, params, 8)

    def _tp(self, tau):
        return TransformPoint.ray(self.s, self.z, tau)

    def _y_pair(self, tau, tp):
        params = self.params
        bv = params.b
        sig = params.sigma
        mu = self.mu
        lam = cmath.sqrt((mu + 1.0) ** 2 + 8.0 * (self.s + tp.alpha) / sig ** 2)
        wmag = abs(2.0 * tp.beta * bv / sig ** 2)
        if wmag > 40.0 * max(1.0, abs(lam)):
            yb, ypb, rel = _y_asymptotic_sum_from_jets(self._jets, tau)
            if rel <= 1e-9:
                return yb, ypb
        return (y_open(bv, tp, params, self.ctl),
                y_open_deriv(bv, tp, params, self.ctl))

    def value(self, tau):
        tp = self._tp(tau)
        yb, ypb = self._y_pair(tau, tp)
        return _phi_from_parts(self.params.b, self.params.x, tp, self.params,
                               yb, ypb, False, self.ctl)

    def value_dx(self, tau):
        tp = self._tp(tau)
        yb, ypb = self._y_pair(tau, tp)
        return _phi_from_parts(self.params.b, self.params.x, tp, self.params,
                               yb, ypb, True, self.ctl)

    def tail(self, kind="value") -> TailEstimate:
        return phi_tail(self.params.b, self.params.x, self.z, self.s,
                        self.params, kind=kind)
