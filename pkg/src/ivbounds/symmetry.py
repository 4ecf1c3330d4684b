"""Put-call symmetry, the close-far transform and the J integral.

The close-far transform pairs the price at total standard deviation ``y``
with the price at ``2k/y``; for fixed ``k > 0`` it is a convex involution of
``(0, 1)``.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from scipy.integrate import quad

from .errors import DomainError
from .normal import pdf
from .pricing import call_price, check_price, intrinsic


class SymmetryImage(NamedTuple):
    k: float
    c: float


def put_call_transform(k: float, c: float) -> SymmetryImage:
    """Map (k, c) to (-k, e^-k c + 1 - e^-k), which has the same implied y.

    The map is its own inverse.
    """
    check_price(k, c)
    # e^-k c + 1 - e^-k == e^-k (c + e^k - 1); expm1 keeps the put value exact
    image = math.exp(-k) * (c + math.expm1(k))
    # rounding can push a near-intrinsic price just outside the image range
    image = min(max(image, intrinsic(-k)), math.nextafter(1.0, 0.0))
    return SymmetryImage(-k, image)


def _check_positive_k(k: float, c: float, *, closed_right: bool = False) -> None:
    if not k > 0.0:
        raise DomainError(f"needs k > 0, got k={k!r}")
    ok = 0.0 < c <= 1.0 if closed_right else 0.0 < c < 1.0
    if not ok:
        raise DomainError(f"needs 0 < c < 1, got c={c!r}")


def _implied(k: float, c: float) -> float:
    from .solver import implied_y

    return implied_y(k, c).y


def c_hat(k: float, c: float) -> float:
    """Close-far dual price C(k, 2k / Y(k, c)), for k > 0 and 0 < c < 1."""
    _check_positive_k(k, c)
    return call_price(k, 2.0 * k / _implied(k, c))


def c_hat_sup_objective(y: float, k: float, c: float) -> float:
    """Supporting-line lower estimate of c_hat(k, c) built at total std dev y.

    Always at most c_hat(k, c); equal to it when y = Y(k, c).
    """
    _check_positive_k(k, c)
    if not y > 0.0:
        raise DomainError(f"needs y > 0, got {y!r}")
    return call_price(k, 2.0 * k / y) - 2.0 * k / (y * y) * (c - call_price(k, y))


def _j_integrand(y: float, k: float) -> float:
    if y <= 0.0:
        return 0.0
    return pdf(-k / y + 0.5 * y) / y


def j_integral(k: float, c: float) -> float:
    """J(k, c) = int_0^c du / Y(k, u), for k > 0 and 0 < c <= 1.

    Evaluated after the substitution u = C(k, y), which turns the singular
    u-integrand into the smooth density phi(-k/y + y/2) / y. The range is
    split at sqrt(2k) where that density peaks in the scale-free sense.
    """
    _check_positive_k(k, c, closed_right=True)
    top = math.inf if c == 1.0 else _implied(k, c)
    mid = math.sqrt(2.0 * k)
    opts = dict(args=(k,), epsabs=1e-13, epsrel=1e-12, limit=200)
    if top <= mid:
        return quad(_j_integrand, 0.0, top, **opts)[0]
    left = quad(_j_integrand, 0.0, mid, **opts)[0]
    right = quad(_j_integrand, mid, top, **opts)[0]
    return left + right
