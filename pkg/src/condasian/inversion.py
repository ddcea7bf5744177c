"""Numerical Laplace transform inversion: Euler and Gaver-Stehfest.

Two complementary algorithms are used, following the numerical procedure
this engine implements:

* the Euler algorithm (binomially averaged Bromwich sum, complex nodes)
  inverts the closed-form Asian transforms, which are cheap to evaluate and
  analytic right of the origin;
* the Gaver-Stehfest algorithm (real nodes, Salzer acceleration) inverts
  the spread transform, whose integral representation is only certified on
  the positive real axis.

Gaver-Stehfest weights are computed in exact rational arithmetic and then
rounded once, so the catastrophic growth of the binomial sums cannot
contaminate the weights themselves.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InversionError, ValidationError

__all__ = ["InversionSpec", "euler_weights", "invert_euler", "gs_weights",
           "gs_nodes", "invert_gs"]


@dataclass(frozen=True)
class InversionSpec:
    """Inversion configuration.

    gs_terms is the acceleration order M: the spread inversion evaluates the
    transform at 2M real nodes and targets ~0.9M correct digits, which in
    double precision restricts M to [3, 7].  euler_terms is the half-width
    of the Bromwich sum used for the closed-form transforms (2*euler_terms+1
    evaluations per inversion).
    """

    algorithm: str = "gaver_stehfest"
    gs_terms: int = 5
    euler_terms: int = 18
    target_abs_tol: float = field(default=None)
    extended_gs_sum: bool = False

    def __post_init__(self):
        if self.algorithm not in ("gaver_stehfest", "euler"):
            raise ValidationError("algorithm must be gaver_stehfest or euler",
                                  field="algorithm")
        if not (3 <= self.gs_terms <= 7):
            raise ValidationError("gs_terms must lie in [3, 7] for the "
                                  "double-precision build", field="gs_terms")
        if self.euler_terms < 6:
            raise ValidationError("euler_terms must be >= 6", field="euler_terms")
        if self.target_abs_tol is None:
            object.__setattr__(self, "target_abs_tol",
                               10.0 ** (-2.2 * self.gs_terms))
        if not self.target_abs_tol > 0.0:
            raise ValidationError("target_abs_tol must be > 0",
                                  field="target_abs_tol")


# ---------------------------------------------------------------------------
# Euler algorithm
# ---------------------------------------------------------------------------

def euler_weights(n):
    """Weights xi_k of the binomially averaged Bromwich sum, k = 0..2n."""
    xi = [0.0] * (2 * n + 1)
    xi[0] = 0.5
    for j in range(1, n + 1):
        xi[j] = 1.0
    xi[2 * n] = 2.0 ** (-n)
    for j in range(1, n):
        xi[2 * n - j] = xi[2 * n - j + 1] + 2.0 ** (-n) * math.comb(n, j)
    return xi


def invert_euler(fhat, t, n=18):
    """Invert a Laplace transform at time t > 0 by the Euler algorithm.

    fhat must accept complex s with positive real part.  The abscissa grows
    like n*ln(10)/3, so n much beyond ~20 exhausts double precision through
    the 10^{n/3} front factor.
    """
    if t <= 0.0:
        raise ValidationError("inversion time must be positive", field="t")
    xi = euler_weights(n)
    m3 = n * math.log(10.0) / 3.0
    total = 0.0
    sign = 1.0
    for k_ in range(2 * n + 1):
        sk = complex(m3, math.pi * k_) / t
        fv = complex(fhat(sk))
        if not (math.isfinite(fv.real) and math.isfinite(fv.imag)):
            raise InversionError(
                "transform evaluation returned a non-finite value at node "
                "%r" % (sk,))
        total += sign * xi[k_] * fv.real
        sign = -sign
    return 10.0 ** (n / 3.0) / t * total


# ---------------------------------------------------------------------------
# Gaver-Stehfest algorithm
# ---------------------------------------------------------------------------

def gs_weights(m):
    """Salzer-accelerated Gaver-Stehfest weights xi_k, k = 1..2M.

    Evaluated in exact rational arithmetic before a single rounding to
    float.  xi alternate in sign and grow like 10^M, which is why the
    transform values must carry ~2.2M correct digits.
    """
    if m < 1:
        raise ValidationError("gs_weights needs M >= 1", field="gs_terms")
    fact_m = math.factorial(m)
    weights = []
    for k_ in range(1, 2 * m + 1):
        acc = Fraction(0)
        for j in range((k_ + 1) // 2, min(k_, m) + 1):
            acc += (Fraction(j ** (m + 1), fact_m) * math.comb(m, j)
                    * math.comb(2 * j, j) * math.comb(j, k_ - j))
        if (m + k_) % 2:
            acc = -acc
        weights.append(acc)
    return [float(w) for w in weights]


def gs_weights_exact(m):
    """Exact rational Gaver-Stehfest weights (for extended accumulation)."""
    fact_m = math.factorial(m)
    weights = []
    for k_ in range(1, 2 * m + 1):
        acc = Fraction(0)
        for j in range((k_ + 1) // 2, min(k_, m) + 1):
            acc += (Fraction(j ** (m + 1), fact_m) * math.comb(m, j)
                    * math.comb(2 * j, j) * math.comb(j, k_ - j))
        if (m + k_) % 2:
            acc = -acc
        weights.append(acc)
    return weights


def gs_nodes(t, m):
    """Real transform nodes s_k = k ln2 / t, k = 1..2M."""
    ln2 = math.log(2.0)
    return [k_ * ln2 / t for k_ in range(1, 2 * m + 1)]


def invert_gs(values, t, m, extended=False):
    """Combine transform values at the Gaver-Stehfest nodes into f(t).

    values[k-1] must equal fhat(k ln2 / t) for k = 1..2M.  With
    extended=True the weighted sum is accumulated in arbitrary precision,
    which only helps when the values themselves carry more than double
    precision.
    """
    if len(values) != 2 * m:
        raise ValidationError("invert_gs expects exactly 2*M node values")
    ln2 = math.log(2.0)
    if extended:
        import mpmath
        with mpmath.mp.workdps(int(2.2 * m) + 30):
            acc = mpmath.mpf(0)
            for w, v in zip(gs_weights_exact(m), values):
                acc += mpmath.mpf(w.numerator) / mpmath.mpf(w.denominator) \
                    * mpmath.mpf(v)
            return float(acc * ln2 / t)
    acc = 0.0
    for w, v in zip(gs_weights(m), values):
        acc += w * v
    return ln2 / t * acc
