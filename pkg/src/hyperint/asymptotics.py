"""Leading-order large-argument forms, improper-integral limits and the regime selector."""

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, DivergenceError, NumericOverflowError
from .special_core import gamma, hyp, same_parameter as _same

EULER_GAMMA = 0.57721566490153286061

OSCILLATORY_THRESHOLD = 40.0
EXPONENTIAL_THRESHOLD = 30.0


class Family(str, Enum):
    SI = "si"
    CI = "ci"
    SHI = "shi"
    CHI = "chi"
    EI = "ei"


class RegimeKind(str, Enum):
    SERIES = "series"
    ASYMPTOTIC = "asymptotic"


@dataclass(frozen=True)
class Regime:
    kind: RegimeKind
    switch_threshold: float

    def __post_init__(self):
        if not self.switch_threshold > 1.0:
            raise DomainError(f"regime threshold must exceed 1, got {self.switch_threshold!r}")


def default_threshold(family):
    family = Family(family)
    if family in (Family.SI, Family.CI):
        return OSCILLATORY_THRESHOLD
    if family is Family.EI:
        return EXPONENTIAL_THRESHOLD
    # growing hyperbolic series have no cancellation, so they never switch
    return math.inf


def select_regime(z_magnitude, family, threshold=None):
    """Series below the threshold, asymptotic at or above it.

    ``z_magnitude`` is |z| of the hypergeometric argument: lambda^2 x^(2 beta)/4
    for the oscillatory families, |lambda x^beta| for the exponential one.
    """
    if z_magnitude < 0:
        raise DomainError("z_magnitude must be non-negative")
    t = default_threshold(family) if threshold is None else float(threshold)
    if Family(family) in (Family.SHI, Family.CHI):
        t = math.inf
    kind = RegimeKind.SERIES if z_magnitude < t else RegimeKind.ASYMPTOTIC
    return Regime(kind, t)


def _is_int(v):
    return float(v).is_integer()


def _parity_sign(exponent):
    return -1.0 if int(exponent) % 2 else 1.0


def _check_point(beta, alpha, lam, x):
    if beta < 1:
        raise DomainError(f"beta must be >= 1, got {beta!r}")
    if not lam > 0:
        raise DomainError("asymptotic forms take lambda > 0; reduce the sign first")
    if x == 0:
        raise DomainError("asymptotic forms need |x| large, got x=0")
    if x < 0 and not (_is_int(beta) and _is_int(alpha)):
        raise DomainError("negative x needs integer beta and alpha")


def dirichlet_power_limit(alpha, lam):
    """Integral of sin(lam x^alpha)/(lam x^alpha) over (0, +inf), alpha >= 1."""
    if not alpha >= 1:
        raise DomainError(f"closed form needs alpha >= 1, got {alpha!r}")
    if not lam > 0:
        raise DomainError("lambda must be positive")
    e = 1.0 / (2.0 * alpha)
    return (2.0 / lam) ** (1.0 / alpha) * gamma(e + 1.0) / gamma(1.5 - e) * math.sqrt(math.pi) / 2.0


def si_limit(beta, alpha, lam):
    """G(+inf) of the Si antiderivative (G(0)=0 branch), lam > 0."""
    s = 0.0 if _same(alpha, beta + 1.0) else beta - alpha + 1.0
    if not alpha > 1.0 - beta:
        raise DivergenceError(f"sine integral diverges at infinity for alpha <= 1-beta (alpha={alpha!r})")
    if s < 0:
        raise DomainError(f"alpha exceeds beta+1 (alpha={alpha!r}, beta={beta!r})")
    if not lam > 0:
        raise DomainError("lambda must be positive")
    if beta == alpha:
        return dirichlet_power_limit(alpha, lam)
    if s == 0:
        return (1.0 - EULER_GAMMA - math.log(lam)) / beta
    a = s / (2.0 * beta)
    return (2.0 / lam) ** (2.0 * a) / s * gamma(a + 1.0) / gamma(1.5 - a) * math.sqrt(math.pi) / 2.0


def ci_limit(beta, alpha, lam):
    """G(+inf) of the Ci antiderivative, lam > 0."""
    if not alpha > 1.0 - beta:
        raise DivergenceError(f"cosine integral diverges at infinity for alpha <= 1-beta (alpha={alpha!r})")
    if alpha > 2.0 * beta + 1.0 and not _same(alpha, 2.0 * beta + 1.0):
        raise DomainError(f"alpha exceeds 2*beta+1 (alpha={alpha!r}, beta={beta!r})")
    if not lam > 0:
        raise DomainError("lambda must be positive")
    if _same(alpha, 1.0):
        return (-EULER_GAMMA - math.log(lam)) / (lam * beta)
    if _same(alpha, beta + 1.0):
        return -math.pi / (2.0 * beta)
    if _same(alpha, 2.0 * beta + 1.0):
        return lam / (4.0 * beta) * (2.0 * EULER_GAMMA - 3.0 + 2.0 * math.log(lam))
    nu = (1.0 - alpha) / beta
    return gamma(nu) * math.cos(math.pi * nu / 2.0) * lam ** (-1.0 - nu) / beta


def ei_limit(beta, alpha, lam):
    """G(+inf) of the Ei antiderivative; finite only for lam < 0."""
    if not lam < 0:
        raise DivergenceError("exponential integral diverges at +inf for lambda > 0")
    if alpha > beta + 1.0 and not _same(alpha, beta + 1.0):
        raise DomainError(f"alpha exceeds beta+1 (alpha={alpha!r}, beta={beta!r})")
    m = -lam
    if _same(alpha, 1.0):
        return (-EULER_GAMMA - math.log(m)) / beta
    if _same(alpha, beta + 1.0):
        return lam / beta * (1.0 - EULER_GAMMA - math.log(m))
    nu = (1.0 - alpha) / beta
    return gamma(nu) * m ** (-nu) / beta


def asym_si_antiderivative(beta, alpha, lam, x):
    """Limit constant plus the leading decaying cosine term."""
    _check_point(beta, alpha, lam, x)
    c = si_limit(beta, alpha, lam)
    ax = abs(x)
    osc = math.cos(lam * ax ** beta) / (lam * lam * beta * ax ** (alpha + beta - 1.0))
    g = c - osc
    if x < 0:
        g *= _parity_sign(beta - alpha + 1.0)
    return g


def asym_ci_antiderivative(beta, alpha, lam, x):
    """Limit constant plus the leading decaying sine term."""
    _check_point(beta, alpha, lam, x)
    c = ci_limit(beta, alpha, lam)
    ax = abs(x)
    osc = math.sin(lam * ax ** beta) / (lam * lam * beta * ax ** (alpha + beta - 1.0))
    g = c + osc
    if x < 0:
        g *= _parity_sign(1.0 - alpha)
    return g


def oscillatory_expansion(beta, alpha, lam, x, kind):
    """Large-x form of the Si (kind='sin') or Ci (kind='cos') antiderivative when
    alpha <= 1-beta, where the integral has no limit at infinity.

    With nu = (1-alpha)/beta and U = lam |x|^beta the antiderivative is
    lam^(-1-nu)/beta times Im or Re of the integral of u^(nu-1) e^(iu) over
    (0, U), expanded through the incomplete gamma function. The expansion
    terminates for integer nu and is cut at its smallest term otherwise.
    """
    _check_point(beta, alpha, lam, x)
    nu = (1.0 - alpha) / beta
    if not nu >= 1.0:
        raise DomainError("expansion is for alpha <= 1-beta; use the leading-order forms")
    u = lam * abs(x) ** beta
    w = -1j * u
    term = 1.0 + 0j
    total = 0j
    for k in range(400):
        total += term
        nxt = term * (nu - 1.0 - k) / w
        if nxt == 0 or abs(nxt) >= abs(term):
            break
        if abs(nxt) <= 2.0 ** -53 * abs(total):
            total += nxt
            break
        term = nxt
    whole = gamma(nu) * cmath.exp(0.5j * math.pi * nu) - 1j * u ** (nu - 1.0) * cmath.exp(1j * u) * total
    part = whole.imag if kind == "sin" else whole.real
    g = lam ** (-1.0 - nu) / beta * part
    if x < 0:
        g *= _parity_sign(beta - alpha + 1.0 if kind == "sin" else 1.0 - alpha)
    return g


def asym_ei_antiderivative(beta, alpha, lam, x):
    """Decaying side (lam < 0) of the Ei antiderivative."""
    if not lam < 0:
        raise DomainError("decaying exponential form needs lambda < 0")
    if not x > 0:
        raise DomainError("exponential family is restricted to x > 0")
    u = lam * x ** beta
    return ei_limit(beta, alpha, lam) + math.exp(u) / (lam * beta * x ** (beta + alpha - 1.0))


def asym_2f2_exp(beta, lam, x):
    """-2 + e^u/u with u = lam x^beta, standing in for u 2F2(1,1;2,2;u)."""
    if beta < 1:
        raise DomainError(f"beta must be >= 1, got {beta!r}")
    if x < 0 and not _is_int(beta):
        raise DomainError("negative x needs integer beta")
    u = lam * x ** beta
    if u == 0:
        raise DomainError("asymptotic form needs a large argument, got 0")
    try:
        e = math.exp(u)
    except OverflowError:
        raise NumericOverflowError(f"exp({u!r}) overflows", value=math.copysign(math.inf, u)) from None
    return -2.0 + e / u


def asym_li(mu, x):
    """x/ln x + ln(ln x/ln mu) - 2 - ln(mu) 2F2(1,1;2,2;ln mu), for x >= 100 mu."""
    if not mu > 1:
        raise DomainError(f"mu must exceed 1, got {mu!r}")
    if not x >= 100.0 * mu:
        raise DomainError(f"asymptotic logarithmic integral needs x >= 100*mu, got x={x!r}")
    lx, lm = math.log(x), math.log(mu)
    const = lm * hyp((1.0, 1.0), (2.0, 2.0), lm).value.real
    return x / lx + math.log(lx / lm) - 2.0 - const
