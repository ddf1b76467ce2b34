"""Closed-form antiderivatives of the generalized sine, cosine, hyperbolic,
exponential and logarithmic integrals, and definite integration through them.

Every antiderivative G is the branch with a termwise-integrated series, so
G(0) = 0 whenever the representation is finite at the origin.
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import asymptotics as asy
from .asymptotics import Family, Regime, RegimeKind, select_regime
from .errors import DivergenceError, DomainError, NumericOverflowError, ScopeError, SingularityError
from .special_core import DEFAULT_TOL, hyp, same_parameter as _same


def _is_int(v):
    return float(v).is_integer()


def _parity(exponent):
    return -1.0 if int(exponent) % 2 else 1.0


@dataclass(frozen=True)
class IntegralSpec:
    """Integrand family with exponents beta, alpha and scale lam.

    Si  sin(lam x^b)/(lam x^a)     Shi  sinh(lam x^b)/(lam x^a)
    Ci  cos(lam x^b)/(lam x^a)     Chi  cosh(lam x^b)/(lam x^a)
    Ei  exp(lam x^b)/x^a
    """

    family: Family
    beta: float
    alpha: float
    lam: float

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        for name in ("beta", "alpha", "lam"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite")
            object.__setattr__(self, name, v)
        if self.beta < 1:
            raise DomainError(f"beta must be >= 1, got {self.beta!r}")
        if self.lam == 0:
            raise DomainError("lambda must be nonzero")
        if self.family in (Family.CI, Family.CHI):
            if self.alpha > 2 * self.beta + 1 and not _same(self.alpha, 2 * self.beta + 1):
                raise ScopeError(f"alpha exceeds 2*beta+1: unsupported range "
                                 f"(alpha={self.alpha!r}, 2*beta+1={2 * self.beta + 1!r})")
        elif self.alpha > self.beta + 1 and not _same(self.alpha, self.beta + 1):
            raise ScopeError(f"alpha exceeds beta+1: unsupported range "
                             f"(alpha={self.alpha!r}, beta+1={self.beta + 1!r})")

    @property
    def integer_exponents(self):
        return _is_int(self.beta) and _is_int(self.alpha)


class EndpointKind(str, Enum):
    FINITE = "finite"
    NEG_INFINITY = "-inf"
    POS_INFINITY = "+inf"


@dataclass(frozen=True)
class Endpoint:
    kind: EndpointKind
    value: float = 0.0

    @classmethod
    def of(cls, v):
        """Coerce a float (possibly infinite), a token string or an Endpoint."""
        if isinstance(v, Endpoint):
            return v
        if isinstance(v, str):
            v = float(v.strip())
        v = float(v)
        if math.isnan(v):
            raise DomainError("endpoint is NaN")
        if v == math.inf:
            return cls(EndpointKind.POS_INFINITY)
        if v == -math.inf:
            return cls(EndpointKind.NEG_INFINITY)
        return cls(EndpointKind.FINITE, v)

    @property
    def is_finite(self):
        return self.kind is EndpointKind.FINITE

    def as_float(self):
        if self.kind is EndpointKind.POS_INFINITY:
            return math.inf
        if self.kind is EndpointKind.NEG_INFINITY:
            return -math.inf
        return self.value


@dataclass(frozen=True)
class AntiderivativeValue:
    value: float
    regime_used: Regime
    series_detail: object = None  # SeriesResult, absent in the asymptotic regime


def integrand(spec, x):
    """The function whose antiderivative the family describes."""
    b, a, lam = spec.beta, spec.alpha, spec.lam
    if x < 0 and not spec.integer_exponents:
        raise DomainError("negative x needs integer beta and alpha")
    if x == 0:
        # leading power of the integrand at the origin
        if spec.family in (Family.SI, Family.SHI):
            lead, at_zero = b - a, 1.0
        elif spec.family is Family.EI:
            lead, at_zero = -a, 1.0
        else:
            lead, at_zero = -a, 1.0 / lam
        if lead > 0:
            return 0.0
        return at_zero if lead == 0 else math.inf
    u = lam * x ** b
    xa = x ** a
    f = spec.family
    if f is Family.SI:
        return math.sin(u) / (lam * xa)
    if f is Family.CI:
        return math.cos(u) / (lam * xa)
    if f is Family.SHI:
        return math.sinh(u) / (lam * xa)
    if f is Family.CHI:
        return math.cosh(u) / (lam * xa)
    return math.exp(u) / xa


def _sine_exponent(spec):
    # beta - alpha + 1, pinned to 0 on the logarithmic case
    if _same(spec.alpha, spec.beta + 1.0):
        return 0.0
    return spec.beta - spec.alpha + 1.0


def _finite_at_zero(spec):
    s = _sine_exponent(spec)
    if spec.family in (Family.SI, Family.SHI):
        return s > 0
    return spec.alpha < 1.0


def _check_x(spec, x):
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    if spec.family is Family.EI and x < 0:
        raise DomainError("exponential family is restricted to x >= 0")
    if x < 0 and not spec.integer_exponents:
        raise DomainError("negative x needs integer beta and alpha")
    if x == 0 and not _finite_at_zero(spec):
        raise DomainError("antiderivative is singular at x=0 for these exponents")


def _series_regime():
    return Regime(RegimeKind.SERIES, math.inf)


def _sine_like(spec, x, tol, threshold, sign):
    # sign=-1: Si, sign=+1: Shi
    b, a = spec.beta, spec.alpha
    lam = abs(spec.lam)
    s = _sine_exponent(spec)
    ax = abs(x)
    u = lam * ax ** b
    z = sign * u * u / 4.0
    family = Family.SI if sign < 0 else Family.SHI
    regime = select_regime(abs(z), family, threshold)
    if regime.kind is RegimeKind.ASYMPTOTIC:
        # only the sine family reaches here; the hyperbolic one never switches
        if not a > 1.0 - b:
            return AntiderivativeValue(asy.oscillatory_expansion(b, a, lam, x, "sin"), regime, None)
        return AntiderivativeValue(asy.asym_si_antiderivative(b, a, lam, x), regime, None)
    if s > 0:
        h = s / (2.0 * b)
        res = hyp((h,), (h + 1.0, 1.5), z, tol)
        value = x ** s / s * res.value.real
    else:
        res = hyp((1.0, 1.0), (2.0, 2.0, 2.5), z, tol)
        value = math.log(ax) + sign * u * u / (12.0 * b) * res.value.real
    return AntiderivativeValue(value, regime, res)


def _cosine_like(spec, x, tol, threshold, sign):
    # sign=-1: Ci, sign=+1: Chi; the integrand is odd in lambda
    b, a = spec.beta, spec.alpha
    lam = abs(spec.lam)
    lam_sign = 1.0 if spec.lam > 0 else -1.0
    ax = abs(x)
    u = lam * ax ** b
    z = sign * u * u / 4.0
    x2b = ax ** (2.0 * b)
    family = Family.CI if sign < 0 else Family.CHI
    regime = select_regime(abs(z), family, threshold)
    if regime.kind is RegimeKind.ASYMPTOTIC:
        if not a > 1.0 - b:
            g = asy.oscillatory_expansion(b, a, lam, x, "cos")
        else:
            g = asy.asym_ci_antiderivative(b, a, lam, x)
        return AntiderivativeValue(lam_sign * g, regime, None)
    if _same(a, 1.0):
        res = hyp((1.0, 1.0), (1.5, 2.0, 2.0), z, tol)
        g = math.log(ax) / lam + sign * lam * x2b / (4.0 * b) * res.value.real
    elif _same(a, 2.0 * b + 1.0):
        res = hyp((1.0, 1.0), (2.0, 2.5, 3.0), z, tol)
        g = (-1.0 / (2.0 * lam * b * x2b) + sign * lam / 2.0 * math.log(ax)
             + lam ** 3 * x2b / (48.0 * b) * res.value.real)
    else:
        c = 2.0 * b - a + 1.0
        h = c / (2.0 * b)
        res = hyp((1.0, h), (h + 1.0, 1.5, 2.0), z, tol)
        g = x ** (1.0 - a) / (lam * (1.0 - a)) + sign * lam * x ** c / (2.0 * c) * res.value.real
    return AntiderivativeValue(lam_sign * g, regime, res)


def si_antiderivative(spec, x, *, tol=DEFAULT_TOL, threshold=None):
    _require(spec, Family.SI)
    _check_x(spec, x)
    return _sine_like(spec, x, tol, threshold, -1.0)


def shi_antiderivative(spec, x, *, tol=DEFAULT_TOL, threshold=None):
    _require(spec, Family.SHI)
    _check_x(spec, x)
    return _sine_like(spec, x, tol, threshold, 1.0)


def ci_antiderivative(spec, x, *, tol=DEFAULT_TOL, threshold=None):
    _require(spec, Family.CI)
    _check_x(spec, x)
    return _cosine_like(spec, x, tol, threshold, -1.0)


def chi_antiderivative(spec, x, *, tol=DEFAULT_TOL, threshold=None):
    _require(spec, Family.CHI)
    _check_x(spec, x)
    return _cosine_like(spec, x, tol, threshold, 1.0)


def ei_antiderivative(spec, x, *, tol=DEFAULT_TOL, threshold=None):
    """Antiderivative of exp(lam x^beta)/x^alpha on x >= 0.

    Only the decaying side (lam x^beta <= -threshold) switches to the
    asymptotic form; the growing series has no cancellation.
    """
    _require(spec, Family.EI)
    _check_x(spec, x)
    b, a, lam = spec.beta, spec.alpha, spec.lam
    u = lam * x ** b
    regime = select_regime(abs(u), Family.EI, threshold)
    if regime.kind is RegimeKind.ASYMPTOTIC and u < 0:
        return AntiderivativeValue(asy.asym_ei_antiderivative(b, a, lam, x), regime, None)
    regime = Regime(RegimeKind.SERIES, regime.switch_threshold)
    if _same(a, 1.0):
        res = hyp((1.0, 1.0), (2.0, 2.0), u, tol)
        value = math.log(x) + u / b * res.value.real
    elif _same(a, b + 1.0):
        res = hyp((1.0, 1.0), (2.0, 3.0), u, tol)
        value = -1.0 / (b * x ** b) + lam * math.log(x) + lam * u / (2.0 * b) * res.value.real
    else:
        s = b - a + 1.0
        d = s / b
        res = hyp((1.0, d), (2.0, d + 1.0), u, tol)
        value = x ** (1.0 - a) / (1.0 - a) + lam * x ** s / s * res.value.real
    if not math.isfinite(value):
        raise NumericOverflowError(f"exponential antiderivative overflows at x={x!r}", value=value)
    return AntiderivativeValue(value, regime, res)


_DISPATCH = {
    Family.SI: si_antiderivative,
    Family.CI: ci_antiderivative,
    Family.SHI: shi_antiderivative,
    Family.CHI: chi_antiderivative,
    Family.EI: ei_antiderivative,
}


def _require(spec, family):
    if spec.family is not family:
        raise DomainError(f"expected a {family.value} spec, got {spec.family.value}")


def antiderivative(spec, x, *, tol=DEFAULT_TOL, threshold=None):
    """Dispatch to the antiderivative of ``spec.family``."""
    return _DISPATCH[spec.family](spec, x, tol=tol, threshold=threshold)


def limit_at(spec, endpoint):
    """G(+-inf) for the families whose improper integral converges."""
    f, b, a, lam = spec.family, spec.beta, spec.alpha, spec.lam
    positive = endpoint.kind is EndpointKind.POS_INFINITY
    if f in (Family.SHI, Family.CHI):
        raise DivergenceError(f"{f.value} integral diverges at infinity")
    if f is Family.EI:
        if not positive:
            raise DomainError("exponential family is restricted to x >= 0")
        return asy.ei_limit(b, a, lam)
    if not positive and not spec.integer_exponents:
        raise DomainError("-inf endpoint needs integer beta and alpha")
    if f is Family.SI:
        g = asy.si_limit(b, a, abs(lam))
        return g if positive else _parity(_sine_exponent(spec)) * g
    g = math.copysign(1.0, lam) * asy.ci_limit(b, a, abs(lam))
    return g if positive else _parity(1.0 - a) * g


def _crosses_zero(lo, hi):
    return lo <= 0.0 <= hi


def definite(spec, a, b, *, tol=DEFAULT_TOL, threshold=None):
    """G(b) - G(a) with infinite endpoints replaced by the limits of G."""
    ea, eb = Endpoint.of(a), Endpoint.of(b)
    fa, fb = ea.as_float(), eb.as_float()
    if fa == fb:
        return 0.0
    lo, hi = min(fa, fb), max(fa, fb)
    if spec.family is Family.EI and lo < 0:
        raise DomainError("exponential family is restricted to x >= 0")
    if lo < 0 and not spec.integer_exponents:
        raise DomainError("negative x needs integer beta and alpha")
    if _crosses_zero(lo, hi) and not _finite_at_zero(spec):
        raise SingularityError("interval touches x=0, where the integrand is not integrable")

    def value(e):
        if e.is_finite:
            return antiderivative(spec, e.value, tol=tol, threshold=threshold).value
        return limit_at(spec, e)

    return value(eb) - value(ea)


class PowerKind(str, Enum):
    SIN = "sin"
    COS = "cos"


def linearize_power(n, kind):
    """sin^n u or cos^n u as (constant, [(trig, k, coefficient), ...]) with exact rationals."""
    if n < 1 or int(n) != n:
        raise DomainError(f"power must be a positive integer, got {n!r}")
    n = int(n)
    kind = PowerKind(kind)
    scale = Fraction(1, 2 ** (n - 1))
    const = Fraction(math.comb(n, n // 2), 2 ** n) if n % 2 == 0 else Fraction(0)
    terms = []
    for j in range((n + 1) // 2):
        k = n - 2 * j
        coef = scale * math.comb(n, j)
        if kind is PowerKind.COS:
            terms.append(("cos", k, coef))
        elif n % 2:
            terms.append(("sin", k, coef * (-1) ** ((n - 1) // 2 + j)))
        else:
            terms.append(("cos", k, coef * (-1) ** (n // 2 + j)))
    return const, terms


def _power_constant(beta, alpha, lam, a, b):
    # integral of 1/(lam x^alpha) between the endpoints
    fa, fb = a.as_float(), b.as_float()
    lo, hi = min(fa, fb), max(fa, fb)
    if _crosses_zero(lo, hi) and alpha >= 1:
        raise SingularityError("interval touches x=0, where the integrand is not integrable")

    def p(x):
        if math.isinf(x):
            if alpha > 1:
                return 0.0
            raise DivergenceError("constant term of the linearized power diverges at infinity")
        if _same(alpha, 1.0):
            return math.log(abs(x)) / lam
        return x ** (1.0 - alpha) / (lam * (1.0 - alpha))

    return p(fb) - p(fa)


def power_reduced_definite(n, kind, beta, alpha, lam, a, b, *, tol=DEFAULT_TOL, threshold=None):
    """Definite integral of sin^n(lam x^beta)/(lam x^alpha) or the cosine analogue."""
    ea, eb = Endpoint.of(a), Endpoint.of(b)
    if ea.as_float() == eb.as_float():
        return 0.0
    const, terms = linearize_power(n, kind)
    total = 0.0
    for trig, k, coef in terms:
        family = Family.SI if trig == "sin" else Family.CI
        spec = IntegralSpec(family, beta, alpha, k * lam)
        # trig(k lam x^b)/(lam x^a) = k * trig(k lam x^b)/(k lam x^a)
        total += float(coef) * k * definite(spec, ea, eb, tol=tol, threshold=threshold)
    if const:
        lo = min(ea.as_float(), eb.as_float())
        if lo < 0 and not (_is_int(beta) and _is_int(alpha)):
            raise DomainError("negative x needs integer beta and alpha")
        total += float(const) * _power_constant(beta, alpha, lam, ea, eb)
    return total


class RecipKind(str, Enum):
    SIN = "sin"
    COS = "cos"


def reciprocal_argument_integral(kind, mu, lam, x, *, tol=DEFAULT_TOL, threshold=None):
    """Antiderivative of sin(lam/x^mu) or cos(lam/x^mu) by the substitution u = 1/x."""
    kind = RecipKind(kind)
    if not x > 0:
        raise DomainError(f"reciprocal-argument integrals need x > 0, got {x!r}")
    if not mu >= 1:
        raise DomainError(f"mu must be >= 1, got {mu!r}")
    if lam == 0:
        return 0.0 if kind is RecipKind.SIN else x
    u = 1.0 / x
    if kind is RecipKind.SIN:
        g = si_antiderivative(IntegralSpec(Family.SI, mu, 2.0, lam), u, tol=tol, threshold=threshold)
    else:
        g = ci_antiderivative(IntegralSpec(Family.CI, mu, 2.0, lam), u, tol=tol, threshold=threshold)
    return -lam * g.value


def exp_exp_antiderivative(beta, lam, x, *, tol=DEFAULT_TOL):
    """Antiderivative of exp(lam e^(beta x))."""
    if beta < 1:
        raise DomainError(f"beta must be >= 1, got {beta!r}")
    try:
        w = lam * math.exp(beta * x)
    except OverflowError:
        raise NumericOverflowError(f"exp({beta * x!r}) overflows",
                                   value=math.copysign(math.inf, lam)) from None
    if w == 0:
        return x
    res = hyp((1.0, 1.0), (2.0, 2.0), w, tol)
    value = x + w / beta * res.value.real
    if not math.isfinite(value):
        raise NumericOverflowError(f"antiderivative overflows at x={x!r}", value=value)
    return value


def log_log_antiderivative(x, *, tol=DEFAULT_TOL):
    """Antiderivative of ln(ln x) on x > 1."""
    if not x > 1:
        raise DomainError(f"ln(ln x) needs x > 1, got {x!r}")
    lx = math.log(x)
    res = hyp((1.0, 1.0), (2.0, 2.0), lx, tol)
    return (x - 1.0) * math.log(lx) - lx * res.value.real


def li(mu, x, *, tol=DEFAULT_TOL, threshold=None):
    """Logarithmic integral from mu to x."""
    if not mu > 1:
        raise DomainError(f"mu must exceed 1, got {mu!r}")
    if not x > 1:
        raise DomainError(f"x must exceed 1, got {x!r}")
    if x == mu:
        return 0.0
    lx, lm = math.log(x), math.log(mu)
    regime = select_regime(lx, Family.EI, threshold)
    if regime.kind is RegimeKind.ASYMPTOTIC and x >= 100.0 * mu:
        return asy.asym_li(mu, x)
    fx = hyp((1.0, 1.0), (2.0, 2.0), lx, tol).value.real
    fm = hyp((1.0, 1.0), (2.0, 2.0), lm, tol).value.real
    return math.log(lx / lm) + lx * fx - lm * fm


def fading_capacity(p, *, tol=DEFAULT_TOL):
    """E[log2(1 + p xi)] for a unit-mean exponential xi, in bits per channel use."""
    if not p > 0:
        raise DomainError(f"power must be positive, got {p!r}")
    spec = IntegralSpec(Family.EI, 1.0, 1.0, -1.0)
    # integral of e^(-t)/t from 1/p to infinity
    tail = definite(spec, 1.0 / p, math.inf, tol=tol)
    try:
        scale = math.exp(1.0 / p)
    except OverflowError:
        raise NumericOverflowError("exp(1/p) overflows", value=math.inf) from None
    value = scale * tail / math.log(2.0)
    if not math.isfinite(value):
        raise NumericOverflowError(f"capacity overflows at p={p!r}", value=value)
    return value
