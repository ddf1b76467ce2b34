"""Independent reference computations: quadrature, differentiation, a prime
sieve and an extended-precision hypergeometric sum."""

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .asymptotics import Family
from .errors import DomainError, ResourceError
from .families import integrand

# Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15)
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)

MAX_DEPTH = 60
MAX_PANELS = 100_000
PRIME_BOUND = 10 ** 8
_EPS = 2.0 ** -52


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    subdivisions: int
    converged: bool
    panel_sums: tuple = ()


def _gk15(f, a, b):
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = f(c)
    kronrod = _WGK[7] * fc
    gauss = _WG[3] * fc
    for j in range(7):
        dx = h * _XGK[j]
        s = f(c - dx) + f(c + dx)
        kronrod += _WGK[j] * s
        if j % 2 == 1:
            gauss += _WG[j // 2] * s
    return kronrod * h, abs((kronrod - gauss) * h)


def adaptive_quadrature(f, a, b, tol=1e-12):
    """Adaptive Gauss-Kronrod 7/15 bisection on [a, b].

    A panel is accepted once its error estimate is within its share
    tol*(width)/(b-a) of the budget, or within rounding of its value.
    """
    if not a < b:
        raise DomainError(f"quadrature needs a < b, got a={a!r}, b={b!r}")
    if not tol > 0:
        raise DomainError("tol must be positive")
    width = b - a
    stack = [(a, b, 0)]
    values, errors = [], []
    ok = True
    panels = 0
    while stack:
        lo, hi, depth = stack.pop()
        v, e = _gk15(f, lo, hi)
        panels += 1
        if not math.isfinite(v):
            raise DomainError(f"integrand is not finite on [{lo!r}, {hi!r}]")
        share = tol * (hi - lo) / width
        if e <= share or e <= 50.0 * _EPS * abs(v):
            values.append(v)
            errors.append(e)
            continue
        if depth >= MAX_DEPTH or panels + len(stack) >= MAX_PANELS:
            ok = False
            values.append(v)
            errors.append(e)
            continue
        mid = 0.5 * (lo + hi)
        stack.append((mid, hi, depth + 1))
        stack.append((lo, mid, depth + 1))
    err = math.fsum(errors)
    return QuadratureResult(math.fsum(values), err, len(values), ok and err <= tol)


def _accelerate(partials, order):
    # repeated pairwise averaging of the last order+1 partial sums
    row = list(partials[-(order + 1):])
    while len(row) > 1:
        row = [0.5 * (row[i] + row[i + 1]) for i in range(len(row) - 1)]
    return row[0]


def oscillatory_tail_quadrature(spec, a, tol=1e-10, max_panels=10_000, order=16):
    """Integral of a Si or Ci integrand over (a, +inf).

    The integrand is split at the zeros of its trigonometric factor and
    the alternating panel series is summed with iterated averaging.
    """
    if spec.family not in (Family.SI, Family.CI):
        raise DomainError("oscillatory tail quadrature handles the sine and cosine families only")
    if a < 0:
        raise DomainError(f"lower limit must be >= 0, got {a!r}")
    lam = abs(spec.lam)
    shift = 0.0 if spec.family is Family.SI else 0.5

    def zero(k):
        return ((k + shift) * math.pi / lam) ** (1.0 / spec.beta)

    def f(t):
        return integrand(spec, t)

    k = 1
    while zero(k) <= a:
        k += 1
    lo = a
    partial = 0.0
    partials, panels = [], []
    previous = None
    err = 0.0
    for _ in range(max_panels):
        hi = zero(k)
        q = adaptive_quadrature(f, lo, hi, tol=tol * 1e-3)
        err += q.error_estimate
        panels.append(q.value)
        partial += q.value
        partials.append(partial)
        lo, k = hi, k + 1
        if len(partials) > order + 1:
            estimate = _accelerate(partials, order)
            if previous is not None:
                delta = abs(estimate - previous)
                if delta <= tol:
                    return QuadratureResult(estimate, delta + err, len(panels), True, tuple(panels))
            previous = estimate
    estimate = _accelerate(partials, min(order, len(partials) - 1))
    return QuadratureResult(estimate, math.inf, len(panels), False, tuple(panels))


def central_derivative(f, x, h):
    if not h > 0:
        raise DomainError("h must be positive")
    return (f(x + h) - f(x - h)) / (2.0 * h)


def prime_pi(x):
    """Number of primes <= x by an odd-only sieve of Eratosthenes."""
    n = int(x)
    if n < 2:
        raise DomainError(f"prime_pi needs x >= 2, got {x!r}")
    if n > PRIME_BOUND:
        raise ResourceError(f"prime_pi is bounded at {PRIME_BOUND}, got {n}")
    # index i stands for 2i+1
    sieve = np.ones((n - 1) // 2 + 1, dtype=bool)
    sieve[0] = False
    for i in range(1, (math.isqrt(n) - 1) // 2 + 1):
        if sieve[i]:
            p = 2 * i + 1
            sieve[p * p // 2::p] = False
    return 1 + int(np.count_nonzero(sieve))


def pfq_extended(upper, lower, z, dps=60):
    """pFq summed in mpmath at ``dps`` digits; used as a cancellation-free reference."""
    with mpmath.workdps(dps):
        return complex(mpmath.hyper([mpmath.mpf(a) for a in upper],
                                    [mpmath.mpf(b) for b in lower],
                                    mpmath.mpmathify(z)))
