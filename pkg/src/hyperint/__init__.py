"""Closed-form hypergeometric antiderivatives with brute-force cross-checks."""

from .asymptotics import (Family, Regime, RegimeKind, asym_2f2_exp, asym_ci_antiderivative,
                          asym_li, asym_si_antiderivative, select_regime)
from .errors import (DivergenceError, DomainError, HyperintError, InvalidParameterError,
                     NumericOverflowError, PoleError, ResourceError, ScopeError, SingularityError)
from .families import (AntiderivativeValue, Endpoint, EndpointKind, IntegralSpec, PowerKind,
                       RecipKind, antiderivative, chi_antiderivative, ci_antiderivative, definite,
                       ei_antiderivative, exp_exp_antiderivative, fading_capacity, li,
                       log_log_antiderivative, power_reduced_definite,
                       reciprocal_argument_integral, shi_antiderivative, si_antiderivative)
from .special_core import HyperParams, SeriesResult, gamma, pfq, pochhammer

__version__ = "0.1.0"

__all__ = [
    "AntiderivativeValue",
    "DivergenceError",
    "DomainError",
    "Endpoint",
    "EndpointKind",
    "Family",
    "HyperParams",
    "HyperintError",
    "IntegralSpec",
    "InvalidParameterError",
    "NumericOverflowError",
    "PoleError",
    "PowerKind",
    "RecipKind",
    "Regime",
    "RegimeKind",
    "ResourceError",
    "ScopeError",
    "SeriesResult",
    "SingularityError",
    "antiderivative",
    "asym_2f2_exp",
    "asym_ci_antiderivative",
    "asym_li",
    "asym_si_antiderivative",
    "chi_antiderivative",
    "ci_antiderivative",
    "definite",
    "ei_antiderivative",
    "exp_exp_antiderivative",
    "fading_capacity",
    "gamma",
    "li",
    "log_log_antiderivative",
    "pfq",
    "pochhammer",
    "power_reduced_definite",
    "reciprocal_argument_integral",
    "select_regime",
    "shi_antiderivative",
    "si_antiderivative",
]
