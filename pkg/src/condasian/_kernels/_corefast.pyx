# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Cython transcription of the scalar special-function kernels.

Algorithms, tolerances and return conventions are identical to
``condasian._kernels.reference``; see that module for documentation.  The
pure-Python module remains the source of truth, this one exists because the
series loops dominate the runtime of the transform quadratures.
"""

from libc.math cimport log, log10, INFINITY, floor, exp as cexp_d

cdef extern from "complex.h" nogil:
    double complex cexp(double complex)
    double complex clog(double complex)
    double complex csqrt(double complex)
    double cabs(double complex)
    double creal(double complex)
    double cimag(double complex)

from ..errors import CancellationError, ConvergenceError, PoleError
from .debye_tables import DEBYE_U as _DEBYE_PY

cdef double _LOG_2PI = 1.8378770664093453
cdef double _LOG10 = 2.302585092994046
cdef double _RESCALE_AT = 1e250
cdef double _RESCALE_LOG = 250.0 * _LOG10 / 1.0  # 250*ln(10)

cdef double[8] _STIRLING
_STIRLING[0] = 1.0 / 12.0
_STIRLING[1] = -1.0 / 360.0
_STIRLING[2] = 1.0 / 1260.0
_STIRLING[3] = -1.0 / 1680.0
_STIRLING[4] = 1.0 / 1188.0
_STIRLING[5] = -691.0 / 360360.0
_STIRLING[6] = 1.0 / 156.0
_STIRLING[7] = -3617.0 / 122400.0

# Debye polynomial coefficients, copied from the shared table module
cdef int _N_DEBYE = len(_DEBYE_PY)
cdef double[11][31] _DEBYE
cdef int[11] _DEBYE_LEN
for _i in range(_N_DEBYE):
    _DEBYE_LEN[_i] = len(_DEBYE_PY[_i])
    for _j in range(_DEBYE_LEN[_i]):
        _DEBYE[_i][_j] = _DEBYE_PY[_i][_j]


cdef double complex _log_sin_pi(double complex z) except *:
    cdef double complex ipz
    if cimag(z) == 0.0 and creal(z) == floor(creal(z)):
        raise PoleError("sin(pi z) vanishes at integer z = %r" % (complex(z),))
    ipz = 1j * 3.141592653589793 * z
    if cimag(z) >= 0.0:
        return -ipz + clog(1.0 - cexp(2.0 * ipz)) + clog(0.5j)
    return ipz + clog(1.0 - cexp(-2.0 * ipz)) + clog(-0.5j)


def log_sin_pi(z):
    return complex(_log_sin_pi(z))


cdef double complex _log_gamma(double complex z) except *:
    cdef double complex shift = 0.0
    cdef double complex w, w2, ser, pw
    cdef int i
    if cimag(z) == 0.0 and creal(z) <= 0.0 and creal(z) == floor(creal(z)):
        raise PoleError("log_gamma pole at nonpositive integer z = %r" % (complex(z),))
    if creal(z) < 0.5:
        return 1.1447298858494002 - _log_sin_pi(z) - _log_gamma(1.0 - z)
    while cabs(z) < 16.0:
        shift = shift + clog(z)
        z = z + 1.0
    w = 1.0 / z
    w2 = w * w
    ser = 0.0
    pw = w
    for i in range(8):
        ser = ser + _STIRLING[i] * pw
        pw = pw * w2
    return (z - 0.5) * clog(z) - z + 0.5 * _LOG_2PI + ser - shift


def log_gamma(z):
    return complex(_log_gamma(z))


def besseli_log_series(double complex v, double complex u, int max_terms,
                       double rel_tol):
    cdef double complex q = u * u * 0.25
    cdef double complex t = 1.0, ssum = 1.0
    cdef double mx = 1.0, scale = 0.0, a = 1.0
    cdef double floor_tol = rel_tol * 1e-2
    cdef int k
    cdef bint done = False
    if floor_tol > 1e-17:
        floor_tol = 1e-17
    for k in range(max_terms):
        t = t * q / ((k + 1.0) * (v + (k + 1.0)))
        ssum = ssum + t
        a = cabs(t)
        if a > mx:
            mx = a
        if k > 3 and a <= floor_tol * cabs(ssum):
            done = True
            break
        if creal(ssum) > _RESCALE_AT or creal(ssum) < -_RESCALE_AT or \
           cimag(ssum) > _RESCALE_AT or cimag(ssum) < -_RESCALE_AT:
            ssum = ssum * 1e-250
            t = t * 1e-250
            mx = mx * 1e-250
            scale += _RESCALE_LOG
    if not done:
        raise ConvergenceError(
            "I_v series did not converge (v=%r, u=%r)" % (complex(v), complex(u)),
            terms=max_terms, last_increment=a)
    if ssum == 0.0:
        raise CancellationError(
            "I_v series summed to exactly zero (v=%r, u=%r)"
            % (complex(v), complex(u)), digits_lost=INFINITY)
    cdef double diag = log10(mx / cabs(ssum))
    if diag < 0.0:
        diag = 0.0
    cdef double complex logv = v * clog(u * 0.5) - _log_gamma(v + 1.0) \
        + clog(ssum) + scale
    return complex(logv), diag


def besselk_log_connection(double complex v, double complex u, int max_terms,
                           double rel_tol):
    cdef double complex lim_, lip, d, ldiff, w
    cdef double d1, d2, sub_loss, diag
    lim_c, d1 = besseli_log_series(-v, u, max_terms, rel_tol)
    lip_c, d2 = besseli_log_series(v, u, max_terms, rel_tol)
    lim_ = lim_c
    lip = lip_c
    if creal(lim_) >= creal(lip):
        d = lip - lim_
        if creal(d) > -745.0:
            ldiff = lim_ + clog(1.0 - cexp(d))
        else:
            ldiff = lim_
    else:
        d = lim_ - lip
        if creal(d) > -745.0:
            w = cexp(d) - 1.0
        else:
            w = -1.0
        ldiff = lip + clog(w)
    sub_loss = (max(creal(lim_), creal(lip)) - creal(ldiff)) / _LOG10
    diag = max(d1, d2) + max(0.0, sub_loss)
    cdef double complex logk = 0.4515827052894548 - _log_sin_pi(v) + ldiff
    return complex(logk), diag


cdef int _debye_setup(double complex v, double complex u,
                      double complex *W_out, double complex *eta_out) nogil:
    cdef double complex y = u / v
    cdef double complex w2 = 1.0 + y * y
    cdef double complex W = csqrt(w2)
    if creal(w2) < 0.0 and cimag(W) > 0.0:
        W = -W
    W_out[0] = W
    eta_out[0] = W + clog(y / (1.0 + W))
    return 0


cdef double _debye_sum(double complex v, double complex p, bint signed,
                       double complex *S_out) nogil:
    cdef double complex S = 1.0, vp = 1.0, acc, t
    cdef double prev = 1.0, a, est = INFINITY, sa
    cdef int k, j
    for k in range(1, _N_DEBYE):
        vp = vp / v
        acc = 0.0
        for j in range(_DEBYE_LEN[k]):
            acc = acc * p + _DEBYE[k][j]
        t = acc * vp
        if signed and (k & 1):
            t = -t
        a = cabs(t)
        sa = cabs(S)
        if sa < 1e-300:
            sa = 1e-300
        if a >= prev:
            est = prev / sa
            break
        S = S + t
        prev = a
        est = a / sa
    S_out[0] = S
    return est


def besseli_log_debye(double complex v, double complex u):
    cdef double complex W, eta, S
    cdef double est
    if creal(v) <= 0.0 or u == 0.0:
        return 0.0j, INFINITY
    _debye_setup(v, u, &W, &eta)
    if cabs(W) < 1e-8:
        return 0.0j, INFINITY
    est = _debye_sum(v, 1.0 / W, False, &S)
    cdef double complex logv = -0.5 * clog(2.0 * 3.141592653589793 * v) \
        + v * eta - 0.5 * clog(W) + clog(S)
    return complex(logv), est


def besselk_log_debye(double complex v, double complex u):
    cdef double complex W, eta, S
    cdef double est
    if creal(v) <= 0.0 or u == 0.0:
        return 0.0j, INFINITY
    _debye_setup(v, u, &W, &eta)
    if cabs(W) < 1e-8:
        return 0.0j, INFINITY
    est = _debye_sum(v, 1.0 / W, True, &S)
    cdef double complex logv = 0.5 * clog(3.141592653589793 / (2.0 * v)) \
        - v * eta - 0.5 * clog(W) + clog(S)
    return complex(logv), est


def besselk_log_poincare(double complex v, double complex u, int max_terms):
    cdef double complex S = 1.0, t = 1.0, four_v2 = 4.0 * v * v
    cdef double prev = 1.0, a, est = INFINITY, sa
    cdef int k, n
    if u == 0.0:
        return 0.0j, INFINITY
    n = max_terms if max_terms < 60 else 60
    for k in range(n):
        t = t * (four_v2 - (2.0 * k + 1.0) ** 2) / (8.0 * (k + 1.0) * u)
        a = cabs(t)
        sa = cabs(S)
        if sa < 1e-300:
            sa = 1e-300
        if a >= prev:
            est = prev / sa
            break
        S = S + t
        prev = a
        est = a / sa
    cdef double complex logv = 0.5 * clog(3.141592653589793 / (2.0 * u)) - u + clog(S)
    return complex(logv), est


def besseli_log_poincare(double complex v, double complex u, int max_terms):
    cdef double complex S = 1.0, t = 1.0, four_v2 = 4.0 * v * v
    cdef double prev = 1.0, a, est = INFINITY, sa
    cdef int k, n
    if u == 0.0:
        return 0.0j, INFINITY
    n = max_terms if max_terms < 60 else 60
    for k in range(n):
        t = -t * (four_v2 - (2.0 * k + 1.0) ** 2) / (8.0 * (k + 1.0) * u)
        a = cabs(t)
        sa = cabs(S)
        if sa < 1e-300:
            sa = 1e-300
        if a >= prev:
            est = prev / sa
            break
        S = S + t
        prev = a
        est = a / sa
    if creal(u) < 350.0:
        est += cexp_d(-2.0 * creal(u))
    cdef double complex logv = -0.5 * clog(2.0 * 3.141592653589793 * u) + u + clog(S)
    return complex(logv), est


def hyp1f2_unit(double complex b1, double complex b2, double complex z,
                int max_terms, double rel_tol):
    cdef double complex t = 1.0, ssum = 1.0, den
    cdef double mx = 1.0, a = 1.0, m
    cdef double floor_tol = rel_tol * 1e-2
    cdef int k
    if floor_tol > 1e-17:
        floor_tol = 1e-17
    for k in range(max_terms):
        den = (b1 + k) * (b2 + k)
        if den == 0.0:
            raise PoleError("1F2 denominator parameter hit a nonpositive integer")
        t = t * z / den
        ssum = ssum + t
        a = cabs(t)
        if a > mx:
            mx = a
        m = cabs(ssum)
        if m < 1.0:
            m = 1.0
        if k > 3 and a <= floor_tol * m:
            return complex(ssum), mx, k + 1
    raise ConvergenceError("1F2 series did not converge", terms=max_terms,
                           last_increment=a)


def hyp1f2_unit_dz(double complex b1, double complex b2, double complex z,
                   int max_terms, double rel_tol):
    cdef double complex t = 1.0 / (b1 * b2), ssum, den
    cdef double mx, a, m
    cdef double floor_tol = rel_tol * 1e-2
    cdef int k
    if floor_tol > 1e-17:
        floor_tol = 1e-17
    ssum = t
    mx = cabs(t)
    a = mx
    for k in range(1, max_terms):
        den = (b1 + k) * (b2 + k)
        if den == 0.0:
            raise PoleError("1F2 denominator parameter hit a nonpositive integer")
        t = t * z * (k + 1.0) / (k * den)
        ssum = ssum + t
        a = cabs(t)
        if a > mx:
            mx = a
        m = cabs(ssum)
        if cabs(t * z) > m:
            m = cabs(t * z)
        if k > 3 and a <= floor_tol * m:
            return complex(ssum), mx, k + 1
    raise ConvergenceError("1F2' series did not converge", terms=max_terms,
                           last_increment=a)


def kummer_log_series(double complex a, double complex b, double complex z,
                      int max_terms, double rel_tol):
    cdef double complex t = 1.0, ssum = 1.0, bk
    cdef double mxl = 0.0, scale = 0.0, ta, c, inc = 1.0
    cdef double floor_tol = rel_tol * 1e-2
    cdef int k
    cdef bint done = False
    if floor_tol > 1e-17:
        floor_tol = 1e-17
    for k in range(max_terms):
        bk = b + k
        if bk == 0.0:
            raise PoleError("Kummer M pole: b is a nonpositive integer")
        t = t * (a + k) * z / (bk * (k + 1.0))
        ssum = ssum + t
        ta = cabs(t)
        if ta > 0.0:
            c = log(ta) + scale
            if c > mxl:
                mxl = c
        inc = ta
        if k > 3 and ta <= floor_tol * cabs(ssum):
            done = True
            break
        if creal(ssum) > _RESCALE_AT or creal(ssum) < -_RESCALE_AT or \
           cimag(ssum) > _RESCALE_AT or cimag(ssum) < -_RESCALE_AT:
            ssum = ssum * 1e-250
            t = t * 1e-250
            scale += _RESCALE_LOG
    if not done:
        raise ConvergenceError("Kummer M series did not converge",
                               terms=max_terms, last_increment=inc)
    cdef double complex logv = clog(ssum) + scale
    cdef double diag = (mxl - creal(logv)) / _LOG10
    if diag < 0.0:
        diag = 0.0
    return complex(logv), diag
