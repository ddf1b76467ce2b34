"""Gamma, Pochhammer symbols and the generalized hypergeometric series."""

import math
from dataclasses import dataclass

from .errors import DomainError, InvalidParameterError, NumericOverflowError, PoleError

DEFAULT_TOL = 2.0 ** -53
DEFAULT_MAX_TERMS = 10_000
# consecutive negligible terms required before stopping
STOP_RUN = 3


def same_parameter(u, v):
    """Equality up to a few ulps, used to route exponent special cases."""
    return abs(u - v) <= 8.0 * 2.0 ** -52 * max(abs(u), abs(v), 1.0)


def _is_nonpositive_integer(v):
    return v <= 0 and float(v).is_integer()


def sinpi(x):
    """sin(pi*x) with exact argument reduction."""
    r = math.fmod(x, 2.0)
    if r < 0.0:
        r += 2.0
    if r <= 0.25:
        return math.sin(math.pi * r)
    if r <= 0.75:
        return math.cos(math.pi * (r - 0.5))
    if r <= 1.25:
        return math.sin(math.pi * (1.0 - r))
    if r <= 1.75:
        return -math.cos(math.pi * (r - 1.5))
    return math.sin(math.pi * (r - 2.0))


def gamma(x):
    """Gamma function of a real argument.

    Raises PoleError at 0, -1, -2, ... and NumericOverflowError (with the
    signed infinity in ``.value``) when the result is not representable.
    """
    x = float(x)
    if math.isnan(x):
        raise DomainError("gamma argument is NaN")
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma has a pole at x={x!r}")
    if x > 0.0 and x.is_integer() and x <= 171.0:
        return float(math.factorial(int(x) - 1))
    sign = 1.0 if x > 0.0 else (-1.0 if math.floor(x) % 2 else 1.0)
    try:
        # CPython's Lanczos kernel already applies the reflection formula below 0.5
        value = math.gamma(x)
    except OverflowError:
        value = math.inf
    if math.isinf(value):
        raise NumericOverflowError(f"gamma({x!r}) overflows", value=sign * math.inf)
    return value


def pochhammer(theta, n):
    """Rising factorial theta (theta+1) ... (theta+n-1) as an iterated product."""
    if n < 0 or int(n) != n:
        raise DomainError(f"pochhammer needs an integer n >= 0, got {n!r}")
    result = 1.0
    for k in range(int(n)):
        result *= theta + k
        if math.isinf(result):
            raise NumericOverflowError(f"pochhammer({theta!r}, {n}) overflows", value=result)
    return result


@dataclass(frozen=True)
class HyperParams:
    """Parameters (a_1..a_p; b_1..b_q; z) of a pFq evaluation."""

    upper: tuple
    lower: tuple
    argument: complex

    def __post_init__(self):
        upper = tuple(float(a) for a in self.upper)
        lower = tuple(float(b) for b in self.lower)
        z = complex(self.argument)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "argument", z)
        if not all(math.isfinite(v) for v in upper + lower):
            raise InvalidParameterError("hypergeometric parameters must be finite")
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise InvalidParameterError("hypergeometric argument must be finite")
        for b in lower:
            if _is_nonpositive_integer(b):
                raise InvalidParameterError(f"lower parameter {b!r} is a non-positive integer")
        p, q = len(upper), len(lower)
        if p > q + 1:
            raise InvalidParameterError(f"{p}F{q} diverges for every z != 0")
        if p == q + 1 and abs(z) >= 1.0:
            raise InvalidParameterError(f"{p}F{q} needs |z| < 1, got |z|={abs(z)!r}")


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    terms_used: int
    tail_estimate: float
    converged: bool


def pfq(params, tol=DEFAULT_TOL, max_terms=DEFAULT_MAX_TERMS):
    """Sum the pFq series by its term recurrence.

    Stops once STOP_RUN consecutive terms fall under tol*max(1,|sum|) and
    the tail estimate (twice the first dropped term) is also under that
    bound. Running out of ``max_terms`` yields converged=False.
    """
    if not tol > 0.0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    if max_terms < 1:
        raise DomainError("max_terms must be at least 1")
    z = params.argument
    if z == 0:
        return SeriesResult(complex(1.0, 0.0), 1, 0.0, True)
    real = z.imag == 0.0
    w = z.real if real else z
    a, b = params.upper, params.lower

    def ratio(n):
        r = w / (n + 1)
        for ai in a:
            r *= ai + n
        for bj in b:
            r /= bj + n
        return r

    term = 1.0 if real else complex(1.0)
    total = term
    run = 0
    n = 0
    while True:
        nxt = term * ratio(n)
        n += 1
        if n >= max_terms:
            tail = 2.0 * abs(nxt)
            converged = tail <= tol * max(1.0, abs(total))
            break
        term = nxt
        total += term
        if not (math.isfinite(abs(total)) and math.isfinite(abs(term))):
            raise NumericOverflowError(f"pFq series overflows at z={z!r}",
                                       value=math.copysign(math.inf, total.real if not real else total))
        bound = tol * max(1.0, abs(total))
        run = run + 1 if abs(term) <= bound else 0
        if run >= STOP_RUN:
            tail = 2.0 * abs(term * ratio(n))
            if tail <= bound:
                converged = True
                n += 1
                break
            run = 0
    value = complex(total, 0.0) if real else complex(total)
    return SeriesResult(value, n, tail, converged)


def hyp(upper, lower, z, tol=DEFAULT_TOL):
    """Convenience wrapper returning only the SeriesResult of pFq(upper; lower; z)."""
    return pfq(HyperParams(tuple(upper), tuple(lower), z), tol=tol)
