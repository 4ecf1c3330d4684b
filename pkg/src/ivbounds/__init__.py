"""Black-Scholes implied total standard deviation with uniform bounds.

Prices are normalized: ``k`` is log-moneyness, ``y = sigma sqrt(T)`` is the
total standard deviation and ``c`` a call price divided by the discounted
forward.
"""

from .bounds import (
    Bracket,
    best_bracket,
    bracket_gul,
    bracket_short1,
    h1,
    h2,
    l_factor,
    lower_cto1,
    lower_via_controls,
    upper_cto1,
    upper_lee,
)
from .errors import ConvergenceError, DomainError
from .pricing import call_price, convexity_threshold, put_price, vega
from .solver import SolveReport, SolverConfig, fixed_point, implied_y, newton_mk
from .symmetry import c_hat, c_hat_sup_objective, j_integral, put_call_transform

__all__ = [
    "Bracket",
    "ConvergenceError",
    "DomainError",
    "SolveReport",
    "SolverConfig",
    "best_bracket",
    "bracket_gul",
    "bracket_short1",
    "c_hat",
    "c_hat_sup_objective",
    "call_price",
    "convexity_threshold",
    "fixed_point",
    "h1",
    "h2",
    "implied_y",
    "j_integral",
    "l_factor",
    "lower_cto1",
    "lower_via_controls",
    "newton_mk",
    "put_call_transform",
    "put_price",
    "upper_cto1",
    "upper_lee",
    "vega",
]
