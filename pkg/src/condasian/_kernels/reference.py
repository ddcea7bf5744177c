"""Pure-Python scalar kernels for the complex special functions.

This module is the reference implementation of the hot numerical kernels;
``condasian._kernels._corefast`` is a Cython transcription of the same
algorithms.  Everything here works on plain Python complex numbers and
returns log-scaled values so that exponentially large or small quantities
never overflow.

Conventions shared by both backends:

* ``log_*`` functions return a complex logarithm of the function value; the
  imaginary part is only meaningful modulo 2*pi (values are consumed through
  ``exp`` of differences).
* Series kernels return ``(log_value_or_value, diag)`` where ``diag`` is the
  estimated number of decimal digits lost to cancellation
  (``log10(max_term / result)``, floored at 0).
* Asymptotic kernels return ``(log_value, err)`` where ``err`` is a relative
  error estimate from the first neglected term; the caller decides whether
  that is acceptable.
"""

import cmath
import math

from ..errors import CancellationError, ConvergenceError, PoleError
from .debye_tables import DEBYE_U

_LOG_2PI = math.log(2.0 * math.pi)
_RESCALE_AT = 1e250
_RESCALE_LOG = 250.0 * math.log(10.0)

# Stirling series coefficients B_{2n} / (2n (2n-1)) for n = 1..8
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)


def log_sin_pi(z):
    """log(sin(pi z)) computed without overflow for large |Im z|."""
    zi = z.imag
    if zi == 0.0 and z.real == math.floor(z.real):
        raise PoleError("sin(pi z) vanishes at integer z = %r" % (z,))
    if zi >= 0.0:
        return (-1j * cmath.pi) * z + cmath.log(1.0 - cmath.exp(2j * cmath.pi * z)) \
            + cmath.log(0.5j)
    return (1j * cmath.pi) * z + cmath.log(1.0 - cmath.exp(-2j * cmath.pi * z)) \
        + cmath.log(-0.5j)


def log_gamma(z):
    """Log-gamma by Stirling's series with argument shift and reflection.

    Matches the analytic continuation of log Gamma on the cut plane; the
    exponential of the result is Gamma(z) everywhere away from the poles.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise PoleError("log_gamma pole at nonpositive integer z = %r" % (z,))
    if z.real < 0.5:
        return math.log(math.pi) - log_sin_pi(z) - log_gamma(1.0 - z)
    shift = 0.0 + 0.0j
    while abs(z) < 16.0:
        shift += cmath.log(z)
        z += 1.0
    w = 1.0 / z
    w2 = w * w
    ser = 0.0 + 0.0j
    pw = w
    for c in _STIRLING:
        ser += c * pw
        pw *= w2
    return (z - 0.5) * cmath.log(z) - z + 0.5 * _LOG_2PI + ser - shift


def besseli_log_series(v, u, max_terms, rel_tol):
    """Log of the modified Bessel function I_v(u) by its power series.

    The normalized series S = sum_k (u^2/4)^k / (k! (v+1)_k) is accumulated
    with periodic rescaling, then combined with the log-prefactor
    v log(u/2) - log Gamma(v+1).
    """
    q = u * u * 0.25
    t = 1.0 + 0.0j
    ssum = t
    mx = 1.0
    scale = 0.0
    floor = min(rel_tol * 1e-2, 1e-17)
    k = 0
    a = 1.0
    for k in range(max_terms):
        t = t * q / ((k + 1.0) * (v + (k + 1.0)))
        ssum += t
        a = abs(t)
        if a > mx:
            mx = a
        if k > 3 and a <= floor * abs(ssum):
            break
        if abs(ssum.real) > _RESCALE_AT or abs(ssum.imag) > _RESCALE_AT:
            ssum *= 1e-250
            t *= 1e-250
            mx *= 1e-250
            scale += _RESCALE_LOG
    else:
        raise ConvergenceError(
            "I_v series did not converge (v=%r, u=%r)" % (v, u),
            terms=max_terms, last_increment=a)
    if ssum == 0.0:
        raise CancellationError(
            "I_v series summed to exactly zero (v=%r, u=%r)" % (v, u),
            digits_lost=math.inf)
    diag = max(0.0, math.log10(mx / abs(ssum)))
    logv = v * cmath.log(u * 0.5) - log_gamma(v + 1.0) + cmath.log(ssum) + scale
    return logv, diag


def besselk_log_connection(v, u, max_terms, rel_tol):
    """Log of K_v(u) through K = pi/(2 sin(pi v)) (I_{-v} - I_v).

    Returns the combined cancellation diagnostic of the two series plus the
    loss in the final subtraction.  Singular for integer v; callers perturb
    the order before reaching this point.
    """
    lim_, d1 = besseli_log_series(-v, u, max_terms, rel_tol)
    lip, d2 = besseli_log_series(v, u, max_terms, rel_tol)
    if lim_.real >= lip.real:
        d = lip - lim_
        ldiff = lim_ + cmath.log(1.0 - cmath.exp(d)) if d.real > -745.0 else lim_
    else:
        d = lim_ - lip
        w = (cmath.exp(d) if d.real > -745.0 else 0.0) - 1.0
        ldiff = lip + cmath.log(w)
    sub_loss = (max(lim_.real, lip.real) - ldiff.real) / math.log(10.0)
    diag = max(d1, d2) + max(0.0, sub_loss)
    logk = math.log(math.pi / 2.0) - log_sin_pi(v) + ldiff
    return logk, diag


def _debye_setup(v, u):
    y = u / v
    w2 = 1.0 + y * y
    W = cmath.sqrt(w2)
    # continuation from the real axis: below-the-cut root when 1+y^2 < 0
    if w2.real < 0.0 and W.imag > 0.0:
        W = -W
    eta = W + cmath.log(y / (1.0 + W))
    return W, eta


def _debye_sum(v, p, signed):
    """Adaptively truncated sum of u_k(p)/v^k; returns (S, rel_err_est)."""
    S = 1.0 + 0.0j
    prev = 1.0
    vp = 1.0 + 0.0j
    est = math.inf
    for k in range(1, len(DEBYE_U)):
        vp /= v
        acc = 0.0 + 0.0j
        for c in DEBYE_U[k]:
            acc = acc * p + c
        t = acc * vp
        if signed and (k & 1):
            t = -t
        a = abs(t)
        if a >= prev:
            est = prev / max(abs(S), 1e-300)
            break
        S += t
        prev = a
        est = a / max(abs(S), 1e-300)
    return S, est


def besseli_log_debye(v, u):
    """Uniform large-order asymptotic for I_v(u) (Debye expansion)."""
    if v.real <= 0.0 or u == 0.0:
        return 0.0j, math.inf
    W, eta = _debye_setup(v, u)
    if abs(W) < 1e-8:
        return 0.0j, math.inf
    S, est = _debye_sum(v, 1.0 / W, signed=False)
    logv = -0.5 * cmath.log(2.0 * cmath.pi * v) + v * eta - 0.5 * cmath.log(W) + cmath.log(S)
    return logv, est


def besselk_log_debye(v, u):
    """Uniform large-order asymptotic for K_v(u) (Debye expansion)."""
    if v.real <= 0.0 or u == 0.0:
        return 0.0j, math.inf
    W, eta = _debye_setup(v, u)
    if abs(W) < 1e-8:
        return 0.0j, math.inf
    S, est = _debye_sum(v, 1.0 / W, signed=True)
    logv = 0.5 * cmath.log(cmath.pi / (2.0 * v)) - v * eta - 0.5 * cmath.log(W) + cmath.log(S)
    return logv, est


def besselk_log_poincare(v, u, max_terms):
    """Large-argument asymptotic K_v(u) ~ sqrt(pi/2u) e^{-u} sum a_k(v)/u^k."""
    if u == 0.0:
        return 0.0j, math.inf
    S = 1.0 + 0.0j
    t = 1.0 + 0.0j
    prev = 1.0
    est = math.inf
    four_v2 = 4.0 * v * v
    n = min(max_terms, 60)
    for k in range(n):
        t = t * (four_v2 - (2.0 * k + 1.0) ** 2) / (8.0 * (k + 1.0) * u)
        a = abs(t)
        if a >= prev:
            est = prev / max(abs(S), 1e-300)
            break
        S += t
        prev = a
        est = a / max(abs(S), 1e-300)
    logv = 0.5 * cmath.log(cmath.pi / (2.0 * u)) - u + cmath.log(S)
    return logv, est


def besseli_log_poincare(v, u, max_terms):
    """Large-argument asymptotic for I_v(u), dominant exponential only.

    The reflected exponential e^{-u} branch is folded into the error
    estimate, so the result is only accepted deep in the right half plane.
    """
    if u == 0.0:
        return 0.0j, math.inf
    S = 1.0 + 0.0j
    t = 1.0 + 0.0j
    prev = 1.0
    est = math.inf
    four_v2 = 4.0 * v * v
    n = min(max_terms, 60)
    for k in range(n):
        t = t * -(four_v2 - (2.0 * k + 1.0) ** 2) / (8.0 * (k + 1.0) * u)
        a = abs(t)
        if a >= prev:
            est = prev / max(abs(S), 1e-300)
            break
        S += t
        prev = a
        est = a / max(abs(S), 1e-300)
    if u.real < 350.0:
        est += math.exp(-2.0 * u.real)
    logv = -0.5 * cmath.log(2.0 * cmath.pi * u) + u + cmath.log(S)
    return logv, est


def hyp1f2_unit(b1, b2, z, max_terms, rel_tol):
    """1F2(1; b1, b2; z) together with its largest-term diagnostic.

    Terms satisfy t_0 = 1, t_{k+1} = t_k z / ((b1+k)(b2+k)); the Pochhammer
    symbol of the unit numerator parameter cancels against k!.
    Returns (value, max_term, terms_used).
    """
    t = 1.0 + 0.0j
    ssum = t
    mx = 1.0
    floor = min(rel_tol * 1e-2, 1e-17)
    a = 1.0
    for k in range(max_terms):
        den = (b1 + k) * (b2 + k)
        if den == 0.0:
            raise PoleError("1F2 denominator parameter hit a nonpositive integer")
        t = t * z / den
        ssum += t
        a = abs(t)
        if a > mx:
            mx = a
        if k > 3 and a <= floor * max(abs(ssum), 1.0):
            return ssum, mx, k + 1
    raise ConvergenceError("1F2 series did not converge", terms=max_terms,
                           last_increment=a)


def hyp1f2_unit_dz(b1, b2, z, max_terms, rel_tol):
    """d/dz of 1F2(1; b1, b2; z): sum_k k z^{k-1} / ((b1)_k (b2)_k)."""
    t = 1.0 / (b1 * b2)
    ssum = t
    mx = abs(t)
    floor = min(rel_tol * 1e-2, 1e-17)
    a = mx
    for k in range(1, max_terms):
        den = (b1 + k) * (b2 + k)
        if den == 0.0:
            raise PoleError("1F2 denominator parameter hit a nonpositive integer")
        t = t * z * (k + 1.0) / (k * den)
        ssum += t
        a = abs(t)
        if a > mx:
            mx = a
        if k > 3 and a <= floor * max(abs(ssum), abs(t * z)):
            return ssum, mx, k + 1
    raise ConvergenceError("1F2' series did not converge", terms=max_terms,
                           last_increment=a)


def kummer_log_series(a, b, z, max_terms, rel_tol):
    """Log of Kummer's confluent hypergeometric M(a, b, z).

    Accumulated with rescaling so arguments with |z| of a few hundred do not
    overflow; returns (log M, digits lost to cancellation).
    """
    t = 1.0 + 0.0j
    ssum = t
    mxl = 0.0
    scale = 0.0
    floor = min(rel_tol * 1e-2, 1e-17)
    inc = 1.0
    for k in range(max_terms):
        bk = b + k
        if bk == 0.0:
            raise PoleError("Kummer M pole: b is a nonpositive integer")
        t = t * (a + k) * z / (bk * (k + 1.0))
        ssum += t
        ta = abs(t)
        if ta > 0.0:
            c = math.log(ta) + scale
            if c > mxl:
                mxl = c
        inc = ta
        if k > 3 and ta <= floor * abs(ssum):
            break
        if abs(ssum.real) > _RESCALE_AT or abs(ssum.imag) > _RESCALE_AT:
            ssum *= 1e-250
            t *= 1e-250
            scale += _RESCALE_LOG
    else:
        raise ConvergenceError("Kummer M series did not converge",
                               terms=max_terms, last_increment=inc)
    logv = cmath.log(ssum) + scale
    diag = max(0.0, (mxl - logv.real) / math.log(10.0))
    return logv, diag
