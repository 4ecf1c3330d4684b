"""Standard normal density, distribution function and quantile.

Everything here is scalar and works on plain floats. The quantile follows
the extended-real convention used by the bound formulas: arguments at or
below 0 map to ``-inf`` and arguments at or above 1 map to ``+inf``.
"""

from __future__ import annotations

import math

from scipy.special import erfcx, ndtri

from .errors import DomainError

SQRT_2 = math.sqrt(2.0)
SQRT_2PI = math.sqrt(2.0 * math.pi)
INV_SQRT_2PI = 1.0 / SQRT_2PI
SQRT_PI_OVER_2 = math.sqrt(math.pi / 2.0)


def pdf(x: float) -> float:
    """Standard normal density."""
    return INV_SQRT_2PI * math.exp(-0.5 * x * x)


def cdf(x: float) -> float:
    """Standard normal distribution function.

    Goes through ``erfc`` on both sides of zero, so the lower tail keeps full
    relative precision until it underflows (near x = -38).
    """
    if x == math.inf:
        return 1.0
    if x == -math.inf:
        return 0.0
    return 0.5 * math.erfc(-x / SQRT_2)


def mills_ratio_lower(x: float) -> float:
    """Return Phi(x) / phi(x), computed without forming either factor.

    Accurate for very negative x, where both numerator and denominator would
    underflow.
    """
    return SQRT_PI_OVER_2 * float(erfcx(-x / SQRT_2))


def quantile(p: float) -> float:
    """Inverse of :func:`cdf` with the convention Phi^-1(u) = -inf for u <= 0
    and +inf for u >= 1.

    The rational approximation from ``scipy.special.ndtri`` seeds one Newton
    step on :func:`cdf`, carried out in Mills-ratio form so that it stays
    well conditioned deep in either tail.
    """
    if math.isnan(p):
        raise DomainError("quantile of NaN is undefined")
    if p <= 0.0:
        return -math.inf
    if p >= 1.0:
        return math.inf
    x = float(ndtri(p))
    if not math.isfinite(x):
        return x
    # Newton on the tail nearest to p: work with Phi(x) for x<0, Phi(-x) for x>0.
    if x <= 0.0:
        tail = cdf(x)
        target = p
        sign = 1.0
    else:
        tail = cdf(-x)
        target = 1.0 - p
        sign = -1.0
    dens = pdf(x)
    if tail > 0.0 and dens > 0.0:
        x -= sign * (tail - target) / dens
    return x


def mills_bound(x: float) -> float:
    """Upper bound 1/sqrt(4 pi x) for exp(x) * Phi(-sqrt(2x)), x > 0."""
    if not x > 0.0:
        raise DomainError(f"mills_bound needs x > 0, got {x!r}")
    return 1.0 / math.sqrt(4.0 * math.pi * x)


def scaled_upper_tail(x: float) -> float:
    """Return exp(x) * Phi(-sqrt(2x)) for x >= 0 without overflow."""
    if x < 0.0:
        raise DomainError(f"scaled_upper_tail needs x >= 0, got {x!r}")
    return 0.5 * float(erfcx(math.sqrt(x)))
