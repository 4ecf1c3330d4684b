"""Leading-order asymptotic formulas for the implied total standard deviation.

These are comparison curves. They evaluate anywhere in their algebraic
domain and do not check whether the inputs are actually in the asymptotic
regime.
"""

from __future__ import annotations

import math
from enum import Enum

from .errors import DomainError
from .normal import quantile


class Regime(str, Enum):
    PRICE_TO_ONE = "price-to-one"
    PRICE_TO_ZERO = "price-to-zero"
    RIGHT_WING = "right-wing"
    LEFT_WING = "left-wing"
    FIXED_U_LEFT = "fixed-u-left"
    FIXED_U_RIGHT = "fixed-u-right"


def _neg2log(x: float, what: str) -> float:
    if not 0.0 < x < 1.0:
        raise DomainError(f"{what} must lie in (0, 1), got {x!r}")
    return -2.0 * math.log(x)


def asym_price_to_one(c: float) -> float:
    """sqrt(-8 log(1 - c)), the large-y shape as c -> 1 at fixed k."""
    if not 0.0 < c < 1.0:
        raise DomainError(f"c must lie in (0, 1), got {c!r}")
    return math.sqrt(-8.0 * math.log1p(-c))


def asym_price_to_zero(k: float, c: float) -> float:
    """k / sqrt(-2 log c) for k > 0; (-k) / sqrt(-2 log p) with
    p = c + e^k - 1 for k < 0."""
    if k > 0.0:
        return k / math.sqrt(_neg2log(c, "c"))
    if k < 0.0:
        p = c + math.expm1(k)
        return -k / math.sqrt(_neg2log(p, "p = c + e^k - 1"))
    raise DomainError("the short-maturity regime needs k != 0")


def asym_wing(k: float, c_or_p: float) -> float:
    """Extreme-strike shape at fixed maturity.

    For k > 0 the second argument is the call price c and the result is
    sqrt(-2 log(e^-k c)) - sqrt(-2 log c). For k < 0 it is the put price p
    and the result is sqrt(-2 log p) - sqrt(-2 log(e^-k p)).
    """
    if k == 0.0:
        return 0.0
    if k > 0.0:
        a = _neg2log(c_or_p, "c")
        b = a + 2.0 * k  # -2 log(e^-k c)
    else:
        b = _neg2log(c_or_p, "p")
        a = b + 2.0 * k  # -2 log(e^-k p)
        if not a > 0.0:
            raise DomainError(f"e^-k p must lie in (0, 1), got {math.exp(-k) * c_or_p!r}")
    # sqrt(b) - sqrt(a) with b - a = 2|k|
    return 2.0 * abs(k) / (math.sqrt(b) + math.sqrt(a))


def asym_fixed_u(k: float, u: float) -> float:
    """sqrt(2|k|) + Phi^-1(u): the wing when the normalized put (k < 0) or
    call (k > 0) price tends to a mass u in (0, 1)."""
    if not 0.0 < u < 1.0:
        raise DomainError(f"u must lie in (0, 1), got {u!r}")
    return math.sqrt(2.0 * abs(k)) + quantile(u)


def evaluate(regime: Regime | str, k: float, x: float) -> float:
    """Dispatch on a regime tag. ``x`` is c, p or u as the regime requires."""
    regime = Regime(regime)
    if regime is Regime.PRICE_TO_ONE:
        return asym_price_to_one(x)
    if regime is Regime.PRICE_TO_ZERO:
        return asym_price_to_zero(k, x)
    if regime in (Regime.RIGHT_WING, Regime.LEFT_WING):
        if (regime is Regime.RIGHT_WING) != (k > 0.0):
            raise DomainError(f"{regime.value} needs k {'>' if regime is Regime.RIGHT_WING else '<'} 0")
        return asym_wing(k, x)
    if (regime is Regime.FIXED_U_LEFT and k > 0.0) or (regime is Regime.FIXED_U_RIGHT and k < 0.0):
        raise DomainError(f"{regime.value} has the wrong sign of k")
    return asym_fixed_u(k, x)
