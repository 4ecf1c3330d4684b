"""Model call-price curves k -> c(k) used to exercise the wing formulas.

Two models:

* variance gamma: X = exp(sigma W(G_T) + theta G_T + m T), with G_T gamma
  distributed (shape T/nu, scale nu, so mean T and variance nu T) and m
  fixed by E[X] = 1;
* Black-Scholes with a jump to default at an independent exponential time
  of rate lam, after which the asset is worth zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad

from .errors import DomainError
from .pricing import call_price, put_price


@dataclass(frozen=True)
class VarianceGammaParams:
    sigma: float
    nu: float
    theta: float
    T: float

    def __post_init__(self):
        if not (self.sigma > 0 and self.nu > 0 and self.T > 0):
            raise DomainError("sigma, nu and T must be positive")
        if not self.theta + 0.5 * self.sigma**2 < 1.0 / self.nu:
            raise DomainError("need theta + sigma^2/2 < 1/nu for a finite mean")

    @property
    def m(self) -> float:
        """Drift making E[X] = 1."""
        return math.log1p(-self.nu * (self.theta + 0.5 * self.sigma**2)) / self.nu

    @property
    def shape(self) -> float:
        return self.T / self.nu

    @property
    def scale(self) -> float:
        return self.nu

    def log_forward(self, g: float) -> float:
        """log E[X | G_T = g]."""
        return (self.theta + 0.5 * self.sigma**2) * g + self.m * self.T

    def gamma_pdf(self, g: float) -> float:
        if g <= 0.0:
            return 0.0
        a, s = self.shape, self.scale
        return math.exp((a - 1.0) * math.log(g) - g / s - math.lgamma(a) - a * math.log(s))

    def mgf(self, r: float) -> float:
        """E[X^r] = e^{r m T} (1 - nu (theta r + sigma^2 r^2 / 2))^{-T/nu}."""
        base = 1.0 - self.nu * (self.theta * r + 0.5 * self.sigma**2 * r * r)
        if not base > 0.0:
            return math.inf
        return math.exp(r * self.m * self.T) * base ** (-self.T / self.nu)


# a published equity-index calibration, five-year horizon
VG_CALIBRATED = VarianceGammaParams(sigma=0.1213, nu=0.1686, theta=-0.1436, T=5.0)


def _mixture(p: VarianceGammaParams, f) -> float:
    # Split the half-line so quad sees the gamma bulk and the far tail separately.
    mean, sd = p.shape * p.scale, math.sqrt(p.shape) * p.scale
    cuts = [0.0, max(mean - 3 * sd, 0.5 * mean), mean, mean + 4 * sd, mean + 12 * sd]
    opts = dict(epsabs=0.0, epsrel=1e-12, limit=400)
    total = 0.0
    for a, b in zip(cuts[:-1], cuts[1:]):
        total += quad(f, a, b, **opts)[0]
    total += quad(f, cuts[-1], math.inf, **opts)[0]
    return total


def vg_call(params: VarianceGammaParams, k: float) -> float:
    """E[(X - e^k)^+] under variance gamma, by mixing Black-Scholes prices
    over the gamma time change."""
    sig = params.sigma

    def integrand(g: float) -> float:
        w = params.gamma_pdf(g)
        if w == 0.0:
            return 0.0
        lf = params.log_forward(g)
        return w * math.exp(lf) * call_price(k - lf, sig * math.sqrt(g))

    return _mixture(params, integrand)


def vg_put(params: VarianceGammaParams, k: float) -> float:
    """E[(e^k - X)^+] under variance gamma, computed directly (no parity)."""
    sig = params.sigma

    def integrand(g: float) -> float:
        w = params.gamma_pdf(g)
        if w == 0.0:
            return 0.0
        lf = params.log_forward(g)
        return w * math.exp(lf) * put_price(k - lf, sig * math.sqrt(g))

    return _mixture(params, integrand)


def vg_mean(params: VarianceGammaParams) -> float:
    """E[X] by the same mixture quadrature; should be 1."""
    return _mixture(params, lambda g: params.gamma_pdf(g) * math.exp(params.log_forward(g)))


@dataclass(frozen=True)
class JumpToDefaultParams:
    sigma: float
    lam: float
    T: float

    def __post_init__(self):
        if not (self.sigma > 0 and self.lam > 0 and self.T > 0):
            raise DomainError("sigma, lam and T must be positive")

    @property
    def default_probability(self) -> float:
        """P(tau <= T) = 1 - exp(-lam T); the limit of e^-k p(k) as k -> -inf."""
        return -math.expm1(-self.lam * self.T)

    @property
    def total_std(self) -> float:
        return self.sigma * math.sqrt(self.T)


JTD_EXAMPLE = JumpToDefaultParams(sigma=0.60, lam=0.05, T=4.0)


def jtd_call(params: JumpToDefaultParams, k: float) -> float:
    """c(k) = C(k - lam T, sigma sqrt(T))."""
    return call_price(k - params.lam * params.T, params.total_std)


def jtd_put(params: JumpToDefaultParams, k: float) -> float:
    """p(k) = c(k) + e^k - 1, computed as the Black-Scholes put plus the
    default mass e^k (1 - e^{-lam T}) so that no cancellation occurs."""
    shifted = k - params.lam * params.T
    return put_price(shifted, params.total_std) + math.exp(k) * params.default_probability
