"""Uniform upper and lower bounds on the implied total standard deviation.

Every bound is an elementary function of ``(k, c)``. Upper bounds come from
plugging a particular control into one of the two infimum objectives
:func:`h1` / :func:`h2`; lower bounds come from monotonicity arguments.
Individual bounds are exposed so a failure can be traced to one formula, and
:func:`best_bracket` combines them into the tightest available interval.

An upper bound of ``math.inf`` means "no information", never a sentinel
large number.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .normal import cdf, quantile, scaled_upper_tail
from .pricing import check_price, intrinsic
from .symmetry import put_call_transform


@dataclass(frozen=True)
class Bracket:
    """Interval ``[lower, upper]`` that contains Y(k, c).

    ``provenance`` names the bound behind each side (``"lower:gul"``,
    ``"upper:cto1"``) plus any notes, e.g. that a negative ``k`` was routed
    through put-call symmetry.
    """

    lower: float
    upper: float
    provenance: tuple[str, ...] = ()

    def __post_init__(self):
        if not 0.0 <= self.lower <= self.upper:
            raise ValueError(f"invalid bracket [{self.lower!r}, {self.upper!r}]")

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def contains(self, y: float, slack: float = 0.0) -> bool:
        return self.lower - slack <= y <= self.upper + slack


def _put_value(k: float, c: float) -> float:
    return c + math.expm1(k)


def _inverse_d1(x: float, a: float) -> float:
    # x + sqrt(x^2 + a), written to avoid cancellation when x << 0
    if x == -math.inf:
        return 0.0
    if x == math.inf:
        return math.inf
    r = math.sqrt(x * x + a)
    if x < 0.0:
        return a / (r - x)
    return x + r


# -- objective functions of the infimum representation -----------------------


def h1(d: float, k: float, c: float) -> float:
    """d - Phi^-1(e^-k (Phi(d) - c)); never below Y(k, c)."""
    check_price(k, c)
    return d - quantile(math.exp(-k) * (cdf(d) - c))


def h2(d: float, k: float, c: float) -> float:
    """Phi^-1(c + e^k Phi(d)) - d; never below Y(k, c)."""
    check_price(k, c)
    return quantile(c + math.exp(k) * cdf(d)) - d


# -- closed-form bounds -------------------------------------------------------


def upper_cto1(k: float, c: float) -> float:
    """-2 Phi^-1((1 - c) / (1 + e^k)). Tight as c -> 1."""
    check_price(k, c)
    return -2.0 * quantile((1.0 - c) / (1.0 + math.exp(k)))


def lower_cto1(k: float, c: float) -> float:
    """Price-to-one lower bound: -2 Phi^-1((1 - c) / 2) for k >= 0, with
    e^k in the denominator for k < 0."""
    check_price(k, c)
    if k >= 0.0:
        return -2.0 * quantile(0.5 * (1.0 - c))
    return -2.0 * quantile((1.0 - c) / (2.0 * math.exp(k)))


def l_factor(k: float, c: float) -> float:
    """L(k, c) = (2/k) [Phi^-1(c / (1 + e^k))^2 + 2], for k > 0."""
    if not k > 0.0:
        raise DomainError(f"l_factor needs k > 0, got {k!r}")
    if not 0.0 < c < 1.0:
        raise DomainError(f"l_factor needs 0 < c < 1, got {c!r}")
    q = quantile(c / (1.0 + math.exp(k)))
    return 2.0 / k * (q * q + 2.0)


def _safe_ratio(num: float, den: float) -> float:
    if den == 0.0:
        return math.inf
    return num / den


def bracket_short1(k: float, c: float) -> Bracket:
    """Short-maturity bounds from the close-far symmetry.

    lower = k / (-Phi^-1(c / (1 + e^k))), and when c L(k, c) <= 1,
    upper = k / (-Phi^-1(c L(k, c) / 2)). Otherwise the upper side is inf.
    """
    check_price(k, c)
    notes: list[str] = []
    if k < 0.0:
        k, c = put_call_transform(k, c)
        notes.append("routed:put-call")
    if k == 0.0:
        return Bracket(0.0, math.inf, ("short1:inapplicable(k=0)",))
    if c == 0.0:
        return Bracket(0.0, 0.0, ("lower:short1", "upper:short1", *notes))
    lower = _safe_ratio(k, -quantile(c / (1.0 + math.exp(k))))
    cl = c * l_factor(k, c)
    if cl <= 1.0:
        upper = _safe_ratio(k, -quantile(0.5 * cl))
        tags = ("lower:short1", "upper:short1")
    else:
        upper = math.inf
        tags = ("lower:short1", "upper:short1:inapplicable(cL>1)")
    return Bracket(lower, max(upper, lower), (*tags, *notes))


def bracket_gul(k: float, c: float) -> Bracket:
    """Wing bounds: Phi^-1(c) + sqrt(Phi^-1(c)^2 + 2k) below and
    Phi^-1(2c) - Phi^-1(e^-k c) above (k >= 0), with the put-price form for
    k < 0."""
    check_price(k, c)
    if k >= 0.0:
        lower = _inverse_d1(quantile(c), 2.0 * k)
        upper = quantile(2.0 * c) - quantile(math.exp(-k) * c)
    else:
        p = _put_value(k, c)
        lower = _inverse_d1(quantile(math.exp(-k) * p), -2.0 * k)
        upper = quantile(2.0 * math.exp(-k) * p) - quantile(p)
    if math.isnan(upper):
        upper = math.inf
    return Bracket(lower, max(upper, lower), ("lower:gul", "upper:gul"))


def upper_lee(k: float, c: float) -> float:
    """Phi^-1(c + e^k Phi(-sqrt(2k))) + sqrt(2k) for k >= 0; put form for
    k < 0. May be inf."""
    check_price(k, c)
    if k >= 0.0:
        return quantile(c + scaled_upper_tail(k)) + math.sqrt(2.0 * k)
    p = _put_value(k, c)
    return quantile(math.exp(-k) * p + scaled_upper_tail(-k)) + math.sqrt(-2.0 * k)


def bracket_cto1(k: float, c: float) -> Bracket:
    lo, hi = lower_cto1(k, c), upper_cto1(k, c)
    return Bracket(lo, max(lo, hi), ("lower:cto1", "upper:cto1"))


def best_bracket(k: float, c: float) -> Bracket:
    """Tightest interval obtainable from all the closed-form bounds."""
    check_price(k, c)
    if c == intrinsic(k):
        return Bracket(0.0, 0.0, ("boundary",))
    if k == 0.0:
        y = -2.0 * quantile(0.5 * (1.0 - c))
        return Bracket(y, y, ("closed-form",))

    lowers = [("cto1", lower_cto1(k, c))]
    uppers = [("cto1", upper_cto1(k, c)), ("lee", upper_lee(k, c))]
    gul = bracket_gul(k, c)
    lowers.append(("gul", gul.lower))
    uppers.append(("gul", gul.upper))
    short = bracket_short1(k, c)
    lowers.append(("short1", short.lower))
    uppers.append(("short1", short.upper))

    lo_name, lower = max(lowers, key=lambda t: t[1])
    hi_name, upper = min(uppers, key=lambda t: t[1])
    notes = ["routed:put-call"] if k < 0.0 else []
    if math.isinf(upper):
        upper = 2.0 * upper_cto1(k, c)
        hi_name = "2x-cto1-fallback"
        if math.isinf(upper):
            raise DomainError("no finite upper bound available")
    if lower > upper:
        # only reachable through rounding when two bounds touch
        lower, upper = upper, lower
    return Bracket(lower, upper, (f"lower:{lo_name}", f"upper:{hi_name}", *notes))


# -- lower bounds from controls ----------------------------------------------


def _h(i: int) -> Callable[[float, float, float], float]:
    if i == 1:
        return h1
    if i == 2:
        return h2
    raise DomainError(f"selector must be 1 or 2, got {i!r}")


def lower_via_controls(
    k: float,
    c: float,
    control: Sequence[float] | Callable[[float], float],
    d: float,
    i: int = 1,
    j: int = 1,
    grid: Sequence[float] | None = None,
) -> float:
    """Lower bound 2k / H_i(d; k, 1 - int_0^c 2k / H_j(D(u); k, u)^2 du).

    ``control`` is either a callable D(u) or the values of D on ``grid``, a
    nondecreasing set of nodes from 0 to c. Without a grid, a callable is
    sampled at 0 and 512 geometrically spaced nodes in [1e-12 c, c] (the
    integrand has a logarithmic singularity at 0), and sampled values are
    taken to sit on a uniform grid. The integral uses the trapezoid rule, minus the
    difference between the full- and half-resolution trapezoid sums as an
    error allowance, so the estimate leans low. This keeps the bound
    one-sided for smooth integrands but is not a rigorous certificate.
    Nodes where the integrand is not finite (e.g. D(0) = -inf) contribute 0,
    which errs on the safe side since the integrand is nonnegative.
    """
    if not k > 0.0:
        raise DomainError(f"lower_via_controls needs k > 0, got {k!r}")
    if not 0.0 < c < 1.0:
        raise DomainError(f"lower_via_controls needs 0 < c < 1, got {c!r}")
    hi, hj = _h(i), _h(j)

    if callable(control):
        if grid is None:
            u = np.concatenate([[0.0], np.geomspace(1e-12 * c, c, 512)])
        else:
            u = np.asarray(grid, float)
        dvals = np.array([control(float(x)) for x in u])
    else:
        dvals = np.asarray(control, dtype=float)
        u = np.linspace(0.0, c, len(dvals)) if grid is None else np.asarray(grid, float)
    if u.shape != dvals.shape or len(u) < 3:
        raise DomainError("control and grid must have the same length (>= 3)")
    if abs(u[0]) > 0.0 or abs(u[-1] - c) > 1e-15 * max(1.0, c) or np.any(np.diff(u) < 0):
        raise DomainError("grid must run nondecreasingly from 0 to c")

    g = np.empty_like(u)
    for n_, (uu, dd) in enumerate(zip(u, dvals)):
        with np.errstate(all="ignore"):
            try:
                val = hj(float(dd), k, float(min(uu, c)))
            except DomainError:
                val = math.nan
        if math.isnan(val) and not math.isinf(dd):
            raise DomainError(f"control gives undefined H_{j} at u={uu!r}")
        if val <= 0.0:
            raise DomainError(f"control makes H_{j} nonpositive at u={uu!r}")
        g[n_] = 0.0 if not math.isfinite(val) else 2.0 * k / (val * val)

    full = float(np.trapezoid(g, u))
    half = float(np.trapezoid(g[::2], u[::2])) if len(u) % 2 == 1 else full
    integral = max(full - abs(full - half), 0.0)

    transformed = 1.0 - integral
    if transformed >= 1.0:
        return 0.0
    if transformed <= 0.0:
        raise DomainError("control integral exceeds 1; the control is not admissible")
    denom = hi(d, k, transformed)
    if not denom > 0.0:
        raise DomainError(f"H_{i} is nonpositive at d={d!r}")
    return 2.0 * k / denom
