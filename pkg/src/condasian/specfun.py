"""Complex special functions with automatic evaluation-regime dispatch.

Every transform formula in this package reduces to five primitives: complex
log-gamma, modified Bessel I and K of complex order and argument, the
generalized hypergeometric series 1F2 with unit numerator parameter, and
Kummer's M.  Each primitive is evaluated by the cheapest method whose error
estimate passes:

1. power series (with a cancellation diagnostic),
2. Debye uniform large-order asymptotics,
3. Poincare large-argument asymptotics,
4. arbitrary-precision fallback (mpmath), with the working precision sized
   from the diagnosed cancellation.

Bessel values are handled in log form throughout so that the exponentially
large/small regimes met on the transform contours never overflow.
"""

import cmath
import math
from dataclasses import dataclass

from . import _kernels as k
from .errors import CancellationError, PoleError, ValidationError

__all__ = [
    "SeriesControl", "DEFAULT_CONTROL", "log_gamma", "bessel_i", "bessel_k",
    "bessel_k_uniform", "besseli_log", "besselk_log", "hyp1f2", "Hyp1F2Result",
    "hyp1f2_dz", "kummer_m", "kummer_m_log", "whittaker_m", "whittaker_m_log",
    "lommel_t",
]

# accept thresholds shared by the dispatchers
_ASY_TOL = 2e-11          # relative error accepted from an asymptotic branch
_SERIES_DIGITS_OK = 6.5   # digits of cancellation tolerated in double precision
_MP_DPS_CAP = 400
_MP_FALLBACK_DPS = 25


@dataclass(frozen=True)
class SeriesControl:
    """Series truncation policy: term budget and stopping tolerances."""

    max_terms: int = 400
    abs_tol: float = 1e-13
    rel_tol: float = 1e-12

    def __post_init__(self):
        if self.max_terms < 16:
            raise ValidationError("max_terms must be >= 16", field="max_terms")
        if not (0.0 < self.abs_tol < 1.0):
            raise ValidationError("abs_tol must lie in (0, 1)", field="abs_tol")
        if not (0.0 < self.rel_tol < 1.0):
            raise ValidationError("rel_tol must lie in (0, 1)", field="rel_tol")


DEFAULT_CONTROL = SeriesControl()

# generous budget used internally on the transform contours, where the
# series may legitimately need ~|u| + a few hundred terms
_WIDE_CONTROL = SeriesControl(max_terms=8000, abs_tol=1e-13, rel_tol=1e-12)


def log_gamma(z):
    """Principal-continuation log of the gamma function.

    exp(log_gamma(z)) equals Gamma(z) on the whole cut plane; poles at
    nonpositive integers raise :class:`PoleError`.
    """
    return k.log_gamma(complex(z))


# ---------------------------------------------------------------------------
# mpmath fallback helpers
# ---------------------------------------------------------------------------

def _mp():
    import mpmath
    return mpmath


def mp_log_besseli(v, u, dps):
    mpm = _mp()
    with mpm.mp.workdps(min(int(dps), _MP_DPS_CAP)):
        val = mpm.besseli(mpm.mpc(v.real, v.imag), mpm.mpc(u.real, u.imag))
        return complex(mpm.log(val))


def mp_log_besselk(v, u, dps):
    mpm = _mp()
    with mpm.mp.workdps(min(int(dps), _MP_DPS_CAP)):
        val = mpm.besselk(mpm.mpc(v.real, v.imag), mpm.mpc(u.real, u.imag))
        return complex(mpm.log(val))


def mp_hyp1f2_unit(b1, b2, z, dps):
    mpm = _mp()
    with mpm.mp.workdps(min(int(dps), _MP_DPS_CAP)):
        val = mpm.hyper([1], [mpm.mpc(b1.real, b1.imag), mpm.mpc(b2.real, b2.imag)],
                        mpm.mpc(z.real, z.imag))
        return complex(val)


def mp_log_gamma(z, dps):
    mpm = _mp()
    with mpm.mp.workdps(min(int(dps), _MP_DPS_CAP)):
        return complex(mpm.loggamma(mpm.mpc(z.real, z.imag)))


# ---------------------------------------------------------------------------
# modified Bessel functions, log form
# ---------------------------------------------------------------------------

def _series_err(diag):
    # residual relative error after losing `diag` digits in double precision
    return 10.0 ** (diag - 15.5)


def besseli_log(v, u, ctl=None):
    """log I_v(u) with an attached relative-error estimate.

    Returns ``(log_value, err)``.  Dispatches between the power series, the
    Debye uniform expansion, the large-argument expansion and the
    arbitrary-precision fallback.
    """
    v = complex(v)
    u = complex(u)
    ctl = ctl or _WIDE_CONTROL
    if u == 0:
        if v == 0:
            return 0.0 + 0.0j, 0.0
        raise ValidationError("besseli_log is singular in log form at u=0, v!=0")
    au, av = abs(u), abs(v)
    best = None
    diag = None
    if au <= 42.0 or au <= av:
        logv, diag = k.besseli_log_series(v, u, ctl.max_terms, ctl.rel_tol)
        err = _series_err(diag)
        if diag <= _SERIES_DIGITS_OK:
            return logv, err
        best = (logv, err)
    if av >= 10.0 and v.real > 0.0:
        logv, est = k.besseli_log_debye(v, u)
        if est <= _ASY_TOL:
            return logv, est
        if best is None or est < best[1]:
            best = (logv, est)
    if au >= 25.0 and u.real > 0.0:
        logv, est = k.besseli_log_poincare(v, u, 60)
        if est <= _ASY_TOL:
            return logv, est
        if best is None or est < best[1]:
            best = (logv, est)
    if diag is None and au <= 3000.0:
        logv, diag = k.besseli_log_series(v, u, max(ctl.max_terms, 8000), ctl.rel_tol)
        err = _series_err(diag)
        if diag <= _SERIES_DIGITS_OK:
            return logv, err
        if best is None or err < best[1]:
            best = (logv, err)
    if best is not None and best[1] <= _ASY_TOL:
        return best
    # mpmath escalates its internal precision on its own; the working dps
    # only needs to cover the accuracy we consume downstream
    return mp_log_besseli(v, u, _MP_FALLBACK_DPS), 10.0 ** (-(_MP_FALLBACK_DPS - 16))


def besselk_log(v, u, ctl=None):
    """log K_v(u) with an attached relative-error estimate.

    Uses K's order symmetry, perturbs near-integer orders where the
    connection formula degenerates, and otherwise dispatches like
    :func:`besseli_log`.
    """
    v = complex(v)
    u = complex(u)
    ctl = ctl or _WIDE_CONTROL
    if u == 0:
        raise PoleError("bessel_k is singular at zero argument")
    if v.real < 0.0:
        v = -v
    if abs(v.imag) < 1e-6 and abs(v.real - round(v.real)) < 1e-6:
        # connection formula degenerates at integer order: evaluate at
        # perturbed orders and average out the O(eps) error terms
        eps = 1e-5
        base = round(v.real)
        lo, e1 = besselk_log(complex(base - eps, v.imag), u, ctl)
        hi, e2 = besselk_log(complex(base + eps, v.imag), u, ctl)
        mid = cmath.exp(lo) * 0.5 + cmath.exp(hi) * 0.5
        if mid == 0.0:
            lo_l = min(lo.real, hi.real)
            mid = (cmath.exp(lo - lo_l) + cmath.exp(hi - lo_l)) * 0.5
            return cmath.log(mid) + lo_l, max(e1, e2) + 1e-9
        return cmath.log(mid), max(e1, e2) + 1e-9
    au, av = abs(u), abs(v)
    best = None
    diag = None
    if av >= 35.0:
        logv, est = k.besselk_log_debye(v, u)
        if est <= _ASY_TOL:
            return logv, est
        best = (logv, est)
    if au >= 25.0 and u.real > 0.0:
        logv, est = k.besselk_log_poincare(v, u, 60)
        if est <= _ASY_TOL:
            return logv, est
        if best is None or est < best[1]:
            best = (logv, est)
    if au <= 3000.0:
        logv, diag = k.besselk_log_connection(v, u, ctl.max_terms, ctl.rel_tol)
        err = _series_err(diag)
        if diag <= _SERIES_DIGITS_OK:
            return logv, err
        if best is None or err < best[1]:
            best = (logv, err)
    if best is not None and best[1] <= _ASY_TOL:
        return best
    return mp_log_besselk(v, u, _MP_FALLBACK_DPS), 10.0 ** (-(_MP_FALLBACK_DPS - 16))


def bessel_i(order, arg, ctl=None):
    """Modified Bessel function I of complex order and argument."""
    order = complex(order)
    arg = complex(arg)
    if arg.imag == 0.0 and arg.real < 0.0 and \
            not (order.imag == 0.0 and order.real == round(order.real)):
        raise ValidationError(
            "bessel_i: argument on the negative-axis branch cut with "
            "non-integer order")
    if arg == 0:
        return 1.0 + 0.0j if order == 0 else 0.0 + 0.0j
    logv, _ = besseli_log(order, arg, ctl)
    if logv.real > 700.0:
        raise CancellationError(
            "bessel_i overflows double precision; use besseli_log",
            digits_lost=math.inf)
    return cmath.exp(logv)


def bessel_k(order, arg, ctl=None):
    """Modified Bessel function K of complex order and argument."""
    logv, _ = besselk_log(order, arg, ctl)
    if logv.real > 700.0:
        raise CancellationError(
            "bessel_k overflows double precision; use besselk_log",
            digits_lost=math.inf)
    return cmath.exp(logv)


def bessel_k_uniform(order, y):
    """Leading-order uniform estimate of K_order(order*y).

    Tail estimator only (it feeds truncation bounds), not a substitute for
    :func:`bessel_k` in final values.  The square root of 1+y^2 is continued
    from the positive real axis: for Re(1+y^2) < 0 the branch with negative
    imaginary part is taken.  y in {0, +i, -i} is excluded.
    """
    order = complex(order)
    y = complex(y)
    if abs(y) < 1e-12 or abs(y - 1j) < 1e-12 or abs(y + 1j) < 1e-12:
        raise ValidationError("bessel_k_uniform excluded point y in {0, +i, -i}")
    w2 = 1.0 + y * y
    W = cmath.sqrt(w2)
    if w2.real < 0.0 and W.imag > 0.0:
        W = -W
    xi = W + cmath.log(y / (1.0 + W))
    logv = 0.5 * cmath.log(cmath.pi / (2.0 * order)) - order * xi - 0.5 * cmath.log(W)
    return cmath.exp(logv)


# ---------------------------------------------------------------------------
# hypergeometric series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Hyp1F2Result:
    """Value of 1F2(1; b1, b2; z) plus its cancellation diagnostics.

    ``max_term`` is the largest intermediate term magnitude; ``max_term``
    much larger than ``abs(value)`` signals digit loss in the summation.
    """

    value: complex
    max_term: float
    terms: int

    @property
    def digits_lost(self):
        if self.value == 0:
            return math.inf
        return max(0.0, math.log10(self.max_term / abs(self.value)))


def _check_1f2_params(b1, b2):
    for name, b in (("b1", b1), ("b2", b2)):
        if b.imag == 0.0 and b.real <= 0.0 and b.real == round(b.real):
            raise PoleError("hyp1f2: %s = %r is a nonpositive integer" % (name, b))


def hyp1f2(b1, b2, z, ctl=None):
    """1F2(1; b1, b2; z) by direct summation of its entire series."""
    b1 = complex(b1)
    b2 = complex(b2)
    z = complex(z)
    ctl = ctl or DEFAULT_CONTROL
    _check_1f2_params(b1, b2)
    if z == 0:
        return Hyp1F2Result(1.0 + 0.0j, 1.0, 1)
    value, max_term, terms = k.hyp1f2_unit(b1, b2, z, ctl.max_terms, ctl.rel_tol)
    return Hyp1F2Result(value, max_term, terms)


def hyp1f2_dz(b1, b2, z, ctl=None):
    """Derivative in z of 1F2(1; b1, b2; z), same diagnostics contract."""
    b1 = complex(b1)
    b2 = complex(b2)
    z = complex(z)
    ctl = ctl or DEFAULT_CONTROL
    _check_1f2_params(b1, b2)
    if z == 0:
        v = 1.0 / (b1 * b2)
        return Hyp1F2Result(v, abs(v), 1)
    value, max_term, terms = k.hyp1f2_unit_dz(b1, b2, z, ctl.max_terms, ctl.rel_tol)
    return Hyp1F2Result(value, max_term, terms)


# ---------------------------------------------------------------------------
# Kummer / Whittaker functions
# ---------------------------------------------------------------------------

def kummer_m_log(a, b, z, ctl=None):
    """log M(a, b, z) with cancellation-aware dispatch.

    For Re z < 0 the series alternates, so the Kummer transformation
    M(a,b,z) = e^z M(b-a, b, -z) is applied first.
    """
    a = complex(a)
    b = complex(b)
    z = complex(z)
    ctl = ctl or _WIDE_CONTROL
    if b.imag == 0.0 and b.real <= 0.0 and b.real == round(b.real):
        raise PoleError("kummer_m: b = %r is a nonpositive integer" % (b,))
    if z == 0:
        return 0.0 + 0.0j
    shift = 0.0 + 0.0j
    if z.real < 0.0:
        shift = z
        a = b - a
        z = -z
    logv, diag = k.kummer_log_series(a, b, z, ctl.max_terms, ctl.rel_tol)
    if diag > _SERIES_DIGITS_OK:
        mpm = _mp()
        dps = min(int(26 + diag), _MP_DPS_CAP)
        with mpm.mp.workdps(dps):
            val = mpm.hyp1f1(mpm.mpc(a.real, a.imag), mpm.mpc(b.real, b.imag),
                             mpm.mpc(z.real, z.imag))
            logv = complex(mpm.log(val))
    return logv + shift


def kummer_m(a, b, z, ctl=None):
    """Kummer's confluent hypergeometric function M(a, b, z)."""
    if complex(z) == 0:
        return 1.0 + 0.0j
    logv = kummer_m_log(a, b, z, ctl)
    if logv.real > 700.0:
        raise CancellationError(
            "kummer_m overflows double precision; use kummer_m_log",
            digits_lost=math.inf)
    return cmath.exp(logv)


def whittaker_m_log(kappa, eta, z, ctl=None):
    """log of the Whittaker function M_{kappa, eta}(z).

    Reduced to Kummer's M through
    M_{kappa,eta}(z) = e^{-z/2} z^{eta+1/2} M(eta-kappa+1/2, 1+2 eta, z).
    """
    kappa = complex(kappa)
    eta = complex(eta)
    z = complex(z)
    if z.imag == 0.0 and z.real < 0.0:
        raise ValidationError("whittaker_m: z on the negative real axis")
    if z == 0:
        raise ValidationError("whittaker_m_log is singular in log form at z=0")
    return -0.5 * z + (eta + 0.5) * cmath.log(z) \
        + kummer_m_log(eta - kappa + 0.5, 1.0 + 2.0 * eta, z, ctl)


def whittaker_m(kappa, eta, z, ctl=None):
    """Whittaker function M_{kappa, eta}(z)."""
    if complex(z) == 0:
        return 0.0 + 0.0j
    logv = whittaker_m_log(kappa, eta, z, ctl)
    if logv.real > 700.0:
        raise CancellationError(
            "whittaker_m overflows double precision; use whittaker_m_log",
            digits_lost=math.inf)
    if logv.real < -745.0:
        return 0.0 + 0.0j
    return cmath.exp(logv)


# ---------------------------------------------------------------------------
# Lommel function
# ---------------------------------------------------------------------------

def lommel_t(mu, lam, z, ctl=None):
    """Modified Lommel function T_{mu, lam}(z).

    Particular solution of z^2 y'' + z y' - (z^2 + lam^2) y = z^{mu+1},
    assembled from the entire 1F2 series and a gamma-weighted I term.
    Real-valued for real mu, lam and z > 0.
    """
    mu_c = complex(mu)
    lam_c = complex(lam)
    z = complex(z)
    ctl = ctl or _WIDE_CONTROL
    for w in (mu_c - lam_c + 1.0, mu_c + lam_c + 1.0):
        if w.imag == 0.0 and w.real == round(w.real) and w.real <= 0.0 \
                and round(w.real) % 2 == 0:
            raise PoleError(
                "lommel_t parameter pole: mu±lam+1 in {0, -2, -4, ...}")
    if z.real <= 0.0:
        raise ValidationError("lommel_t requires Re z > 0")
    b1 = 0.5 * (mu_c - lam_c + 3.0)
    b2 = 0.5 * (mu_c + lam_c + 3.0)
    f = hyp1f2(b1, b2, 0.25 * z * z, ctl)
    first = cmath.exp((mu_c + 1.0) * cmath.log(z)) * f.value / \
        ((mu_c - lam_c + 1.0) * (mu_c + lam_c + 1.0))
    li, _ = besseli_log(lam_c, z, ctl)
    lsecond = (mu_c - 1.0) * math.log(2.0) + log_gamma(0.5 * (mu_c - lam_c + 1.0)) \
        + log_gamma(0.5 * (mu_c + lam_c + 1.0)) + li
    second = cmath.exp(lsecond) if lsecond.real > -745.0 else 0.0
    value = first - second
    scale = max(abs(first), abs(second))
    if scale > 0.0 and abs(value) < scale * 1e-8:
        digits = math.log10(scale / max(abs(value), 1e-300))
        mpm = _mp()
        dps = min(int(26 + digits), _MP_DPS_CAP)
        with mpm.mp.workdps(dps):
            mz = mpm.mpc(z.real, z.imag)
            mmu = mpm.mpc(mu_c.real, mu_c.imag)
            mlam = mpm.mpc(lam_c.real, lam_c.imag)
            mf = mpm.hyper([1], [(mmu - mlam + 3) / 2, (mmu + mlam + 3) / 2],
                           mz * mz / 4)
            mfirst = mz ** (mmu + 1) * mf / ((mmu - mlam + 1) * (mmu + mlam + 1))
            msec = 2 ** (mmu - 1) * mpm.gamma((mmu - mlam + 1) / 2) * \
                mpm.gamma((mmu + mlam + 1) / 2) * mpm.besseli(mlam, mz)
            value = complex(mfirst - msec)
    return value
