"""Normalized Black-Scholes call and put prices.

Coordinates are log-moneyness ``k`` and total standard deviation
``y = sigma * sqrt(T)``. Prices are divided by the discounted forward, so a
call lives in ``[(1 - e^k)^+, 1)``.
"""

from __future__ import annotations

import math

from .errors import DomainError
from .normal import cdf, mills_ratio_lower, pdf


def intrinsic(k: float) -> float:
    """Lower end (1 - e^k)^+ of the call price range."""
    return max(-math.expm1(k), 0.0)


def check_price(k: float, c: float) -> None:
    """Raise :class:`DomainError` unless (1 - e^k)^+ <= c < 1."""
    if not (math.isfinite(k) and math.isfinite(c)):
        raise DomainError(f"k and c must be finite, got k={k!r}, c={c!r}")
    lo = intrinsic(k)
    if not lo <= c < 1.0:
        raise DomainError(
            f"price must lie in [(1-e^k)^+, 1) = [{lo!r}, 1), got c={c!r}"
        )


def _otm_call(k: float, y: float) -> float:
    # k >= 0, y > 0
    d1 = -k / y + 0.5 * y
    if d1 < 0.0:
        # Convex region. e^k phi(d2) == phi(d1), so the price factors as
        # phi(d1) * (Phi(d1)/phi(d1) - Phi(d2)/phi(d2)) and never forms
        # two underflowing tails.
        d2 = d1 - y
        return pdf(d1) * (mills_ratio_lower(d1) - mills_ratio_lower(d2))
    return cdf(d1) - math.exp(k) * cdf(d1 - y)


def call_price(k: float, y: float) -> float:
    """Black-Scholes call price C(k, y) in normalized units.

    >>> round(call_price(0.0, 2.0), 10)
    0.6826894921
    """
    if not y >= 0.0:
        raise DomainError(f"total standard deviation must be >= 0, got {y!r}")
    if not math.isfinite(k):
        raise DomainError(f"log-moneyness must be finite, got {k!r}")
    if y == 0.0:
        return intrinsic(k)
    if math.isinf(y):
        return 1.0
    if k >= 0.0:
        return _otm_call(k, y)
    # put-call symmetry: C(k, y) = 1 - e^k + e^k C(-k, y)
    return -math.expm1(k) + math.exp(k) * _otm_call(-k, y)


def put_price(k: float, y: float) -> float:
    """Normalized put price, C(k, y) + e^k - 1."""
    if not y >= 0.0:
        raise DomainError(f"total standard deviation must be >= 0, got {y!r}")
    if k <= 0.0:
        if y == 0.0:
            return 0.0
        return math.exp(k) * _otm_call(-k, y)
    return call_price(k, y) + math.expm1(k)


def vega(k: float, y: float) -> float:
    """Derivative of C(k, y) in y, equal to phi(-k/y + y/2)."""
    if not y > 0.0:
        raise DomainError(f"vega needs y > 0, got {y!r}")
    return pdf(-k / y + 0.5 * y)


def convexity_threshold(k: float) -> float:
    """sqrt(2k): C(k, .) is convex below this point and concave above it."""
    if k < 0.0:
        raise DomainError(
            f"convexity threshold needs k >= 0 (reflect with put-call symmetry), got {k!r}"
        )
    return math.sqrt(2.0 * k)
