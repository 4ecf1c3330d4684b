"""Inversion of the call price map y -> C(k, y).

Three methods share one entry point, :func:`implied_y`:

* ``bisection`` started from :func:`~ivbounds.bounds.best_bracket`,
* ``newton``, the Newton iteration seeded at the inflection point sqrt(2k),
  which approaches the root monotonically from one side,
* ``fixed-point``, iterating y -> H1(-k/y + y/2; k, c). Every iterate after
  the first is an upper bound and the convergence is quadratic.

Negative k is reflected to positive k with put-call symmetry before any
method runs; k = 0 uses the closed form.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Literal

from .bounds import Bracket, best_bracket, bracket_gul, h1, upper_cto1
from .errors import ConvergenceError, DomainError
from .normal import quantile
from .pricing import call_price, check_price, intrinsic, vega
from .symmetry import put_call_transform

log = logging.getLogger(__name__)

Method = Literal["bisection", "newton", "fixed-point"]
METHODS: tuple[str, ...] = ("bisection", "newton", "fixed-point")


@dataclass(frozen=True)
class SolverConfig:
    """Stopping rules.

    ``tolerance`` is the price residual |C(k, y) - c| demanded on exit.
    ``y_tolerance`` is a relative width in y-space: bisection also requires
    its bracket to shrink below ``y_tolerance * max(1, y)``, Newton its last
    step, and the fixed-point iteration the gap between successive iterates.
    A pure residual test is not enough where vega is small.
    """

    method: Method = "bisection"
    tolerance: float = 1e-12
    max_iterations: int = 200
    record_trace: bool = False
    y_tolerance: float = 1e-14

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; choose from {METHODS}")
        if not self.tolerance > 0.0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        if not self.y_tolerance > 0.0:
            raise ValueError("y_tolerance must be positive")


@dataclass
class SolveReport:
    y: float
    iterations: int
    residual: float
    trace: list[float] = field(default_factory=list)
    bracket_used: Bracket | None = None
    method: str = "bisection"
    notes: tuple[str, ...] = ()


DEFAULT = SolverConfig()


def _ytol(cfg: SolverConfig, y: float) -> float:
    return cfg.y_tolerance * max(1.0, abs(y))


def _checked_bracket(k: float, c: float, br: Bracket) -> tuple[float, float]:
    """Return endpoints that straddle the root, widening if rounding in a
    closed-form bound put an endpoint on the wrong side."""
    lo, hi = br.lower, br.upper
    while lo > 0.0 and call_price(k, lo) > c:
        lo = 0.0 if lo < 1e-300 else 0.5 * lo
    while call_price(k, hi) < c:
        hi = 2.0 * hi + 1e-300
    return lo, hi


def _bisect(k, c, lo, hi, cfg, trace, iterations=0):
    while True:
        if iterations >= cfg.max_iterations:
            raise ConvergenceError(
                f"bisection did not converge in {cfg.max_iterations} iterations",
                bracket=Bracket(lo, hi, ("bisection",)),
                iterations=iterations,
            )
        m = 0.5 * (lo + hi)
        f = call_price(k, m) - c
        iterations += 1
        if cfg.record_trace:
            trace.append(m)
        if f == 0.0:
            return m, iterations
        if f > 0.0:
            hi = m
        else:
            lo = m
        narrow = hi - lo <= _ytol(cfg, m)
        nxt = 0.5 * (lo + hi)
        stalled = nxt <= lo or nxt >= hi
        if (abs(f) <= cfg.tolerance and narrow) or stalled:
            return m, iterations


def bisection(k: float, c: float, config: SolverConfig = DEFAULT) -> SolveReport:
    """Bisection on [lower, upper] from :func:`best_bracket`, for k > 0."""
    br = best_bracket(k, c)
    lo, hi = _checked_bracket(k, c, br)
    trace: list[float] = []
    if lo == hi:
        return SolveReport(lo, 0, abs(call_price(k, lo) - c), trace, br, "bisection")
    y, n = _bisect(k, c, lo, hi, config, trace)
    return SolveReport(y, n, abs(call_price(k, y) - c), trace, br, "bisection")


def newton_mk(k: float, c: float, config: SolverConfig = DEFAULT) -> SolveReport:
    """Newton iteration y <- y + (c - C(k, y)) / vega seeded at sqrt(2k).

    Below the inflection price the price curve is convex, so the iterates
    decrease to the root from above; above it they increase from below.
    Each iterate therefore tightens one side of the bracket. If vega
    underflows or an iterate leaves the bracket the remaining work is done by
    bisection.
    """
    br = best_bracket(k, c)
    lo, hi = _checked_bracket(k, c, br)
    trace: list[float] = []
    y = math.sqrt(2.0 * k)
    y = min(max(y, lo), hi)
    notes: list[str] = []
    n = 0
    while n < config.max_iterations:
        f = call_price(k, y) - c
        if config.record_trace:
            trace.append(y)
        if f > 0.0:
            hi = min(hi, y)
        elif f < 0.0:
            lo = max(lo, y)
        else:
            return SolveReport(y, n, 0.0, trace, br, "newton", tuple(notes))
        v = vega(k, y) if y > 0.0 else 0.0
        step = -f / v if v > 0.0 else math.nan
        y_new = y + step
        n += 1
        if not math.isfinite(y_new) or not lo <= y_new <= hi:
            notes.append(f"bisection-fallback@{n}")
            y, n = _bisect(k, c, lo, hi, config, trace, n)
            break
        done = abs(step) <= _ytol(config, y_new)
        y = y_new
        if done and abs(call_price(k, y) - c) <= config.tolerance:
            break
    else:
        raise ConvergenceError(
            f"newton did not converge in {config.max_iterations} iterations",
            bracket=Bracket(lo, hi, ("newton",)),
            iterations=n,
        )
    return SolveReport(y, n, abs(call_price(k, y) - c), trace, br, "newton", tuple(notes))


def fixed_point_map(y: float, k: float, c: float) -> float:
    """F(y) = H1(-k/y + y/2; k, c). Its unique fixed point is Y(k, c)."""
    return h1(-k / y + 0.5 * y, k, c)


def fixed_point_floor(k: float, c: float) -> float:
    """y_min = Phi^-1(c) + sqrt(Phi^-1(c)^2 + 2k); F is defined above it."""
    return bracket_gul(k, c).lower


def fixed_point(
    k: float, c: float, y0: float | None = None, config: SolverConfig = DEFAULT
) -> SolveReport:
    """Iterate y_{n+1} = F(y_n) from ``y0``. ``trace`` always holds y_0, y_1, ...

    The default seed is the upper side of :func:`best_bracket`. Seeding from
    the price-to-one bound alone converges very slowly for tiny prices.

    From y_1 on the iterates decrease strictly to Y(k, c), each one an upper
    bound. Iteration stops when two iterates are within ``y_tolerance`` or
    when rounding stops the decrease.
    """
    notes: list[str] = []
    if k < 0.0:
        k, c = put_call_transform(k, c)
        notes.append("routed:put-call")
    check_price(k, c)
    if not k > 0.0:
        raise DomainError("the fixed-point map needs k != 0")
    if not 0.0 < c < 1.0:
        raise DomainError(f"the fixed-point map needs 0 < c < 1, got {c!r}")
    y_min = fixed_point_floor(k, c)
    if y0 is None:
        y0 = best_bracket(k, c).upper
        if not y0 > y_min:
            y0 = upper_cto1(k, c)
    if not y0 > y_min:
        raise DomainError(f"y0 must exceed y_min = {y_min!r}, got {y0!r}")

    trace = [y0]
    y = y0
    n = 0
    while True:
        if n >= config.max_iterations:
            raise ConvergenceError(
                f"fixed-point iteration did not converge in {config.max_iterations} steps",
                bracket=Bracket(0.0, min(trace[1:] or [math.inf]), ("fixed-point",)),
                iterations=n,
            )
        y_new = fixed_point_map(y, k, c)
        n += 1
        if n == 1 and y_new > y:
            notes.append("seed-below-root")
        if n >= 2 and y_new >= y:
            # rounding floor: F no longer decreases
            break
        trace.append(y_new)
        if abs(y_new - y) <= _ytol(config, y_new):
            y = y_new
            break
        y = y_new
    y = trace[-1]
    return SolveReport(
        y, n, abs(call_price(k, y) - c), trace, None, "fixed-point", tuple(notes)
    )


def implied_y(k: float, c: float, config: SolverConfig | None = None) -> SolveReport:
    """Implied total standard deviation Y(k, c), i.e. the y with C(k, y) = c.

    Raises :class:`DomainError` unless (1 - e^k)^+ <= c < 1.
    """
    cfg = DEFAULT if config is None else config
    check_price(k, c)
    if c == intrinsic(k):
        return SolveReport(0.0, 0, 0.0, [], Bracket(0.0, 0.0, ("boundary",)), cfg.method)
    if k == 0.0:
        y = -2.0 * quantile(0.5 * (1.0 - c))
        return SolveReport(
            y, 0, abs(call_price(0.0, y) - c), [], Bracket(y, y, ("closed-form",)),
            cfg.method, ("closed-form",),
        )
    kk, cc = (k, c) if k > 0.0 else put_call_transform(k, c)
    if cc <= 0.0:
        # the put value is below the resolution of c; y is indistinguishable from 0
        return SolveReport(0.0, 0, abs(call_price(k, 0.0) - c), [], None, cfg.method)
    if cfg.method == "bisection":
        rep = bisection(kk, cc, cfg)
    elif cfg.method == "newton":
        rep = newton_mk(kk, cc, cfg)
    else:
        rep = fixed_point(kk, cc, None, cfg)
    if k < 0.0:
        rep.notes = (*rep.notes, "routed:put-call")
    rep.residual = abs(call_price(k, rep.y) - c)
    return rep
