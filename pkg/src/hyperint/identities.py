"""1F2 and 2F3 values rebuilt from pairs of 2F2 values at opposite arguments,
checked numerically by evaluating both sides with the same series engine."""

from dataclasses import dataclass

from .errors import DomainError, ScopeError
from .special_core import DEFAULT_TOL, hyp


@dataclass(frozen=True)
class IdentityResidual:
    lhs: complex
    rhs: complex
    abs_residual: float


def _residual(lhs, rhs):
    return IdentityResidual(complex(lhs), complex(rhs), abs(lhs - rhs))


def _phase(beta, alpha, lam, x):
    if beta < 1:
        raise DomainError(f"beta must be >= 1, got {beta!r}")
    if not alpha < beta + 1:
        raise ScopeError(f"alpha exceeds beta+1: identity needs alpha < beta+1 (alpha={alpha!r})")
    if x < 0 and not float(beta).is_integer():
        raise DomainError("negative x needs integer beta")
    return lam * x ** beta


def _f22(d, w, tol):
    return hyp((1.0, d), (2.0, d + 1.0), w, tol).value


def check_even_part_trig(beta, alpha, lam, x, tol=DEFAULT_TOL):
    """1F2(h; h+1, 3/2; -y^2/4) against the mean of 2F2(1, 2h; 2, 2h+1; +-iy)."""
    y = _phase(beta, alpha, lam, x)
    h = (beta - alpha + 1.0) / (2.0 * beta)
    lhs = hyp((h,), (h + 1.0, 1.5), -y * y / 4.0, tol).value
    rhs = 0.5 * (_f22(2 * h, 1j * y, tol) + _f22(2 * h, -1j * y, tol))
    return _residual(lhs, rhs)


def check_even_part_hyperbolic(beta, alpha, lam, x, tol=DEFAULT_TOL):
    """1F2(h; h+1, 3/2; +y^2/4) against the mean of 2F2(1, 2h; 2, 2h+1; +-y)."""
    y = _phase(beta, alpha, lam, x)
    h = (beta - alpha + 1.0) / (2.0 * beta)
    lhs = hyp((h,), (h + 1.0, 1.5), y * y / 4.0, tol).value
    rhs = 0.5 * (_f22(2 * h, y, tol) + _f22(2 * h, -y, tol))
    return _residual(lhs, rhs)


def check_odd_part(beta, alpha, lam, x, hyperbolic=False, tol=DEFAULT_TOL):
    """(s/c) y 2F3(1, g; g+1, 3/2, 2; -+y^2/4) against the odd part of 2F2(1, d; 2, d+1; .).

    s = beta-alpha+1, c = 2 beta-alpha+1, d = s/beta, g = c/(2 beta). The
    trigonometric form carries a factor i on the left and uses +-iy.
    """
    y = _phase(beta, alpha, lam, x)
    s = beta - alpha + 1.0
    c = 2.0 * beta - alpha + 1.0
    d = s / beta
    g = c / (2.0 * beta)
    sign = 1.0 if hyperbolic else -1.0
    core = s / c * y * hyp((1.0, g), (g + 1.0, 1.5, 2.0), sign * y * y / 4.0, tol).value
    if hyperbolic:
        return _residual(core, _f22(d, y, tol) - _f22(d, -y, tol))
    return _residual(1j * core, _f22(d, 1j * y, tol) - _f22(d, -1j * y, tol))
