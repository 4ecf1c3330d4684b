import math

import numpy as np
import pytest
from scipy.optimize import minimize_scalar

from ivbounds import bounds
from ivbounds.bounds import (
    Bracket,
    best_bracket,
    bracket_cto1,
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
from ivbounds.errors import DomainError
from ivbounds.normal import cdf, quantile
from ivbounds.pricing import call_price, intrinsic

from oracles import implied_by_bisection

# frozen oracle values (closed forms evaluated independently)
UPPER_CTO1_02_05 = 1.5102766068612112
LOWER_CTO1_02_05 = 1.3489795003921636
L_02_01 = 48.737796755564645
SHORT1_LOWER_02_001 = 0.07657178770618756
GUL_LOWER_2_1EM6 = 0.40361385854686116

KS = [-3.0, -1.0, -0.2, -0.05, 0.05, 0.2, 1.0, 3.0]
SLACK = 1e-10


def price_grid(k, n=20):
    """n prices spread through the attainable range, denser near both ends."""
    lo = intrinsic(k)
    t = np.concatenate([np.logspace(-10, -1, n // 2), 1 - np.logspace(-1, -8, n - n // 2)])
    return [lo + float(s) * (1 - lo) for s in t]


def sandwich_cases():
    for k in KS:
        for c in price_grid(k):
            if intrinsic(k) < c < 1.0:
                yield k, c


CASES = list(sandwich_cases())


@pytest.fixture(scope="module")
def truth():
    return {(k, c): implied_by_bisection(k, c, hi=80.0) for k, c in CASES}


def test_frozen_values():
    assert upper_cto1(0.2, 0.5) == pytest.approx(UPPER_CTO1_02_05, abs=1e-13)
    assert lower_cto1(0.2, 0.5) == pytest.approx(LOWER_CTO1_02_05, abs=1e-13)
    assert l_factor(0.2, 0.1) == pytest.approx(L_02_01, rel=1e-13)
    assert bracket_short1(0.2, 0.01).lower == pytest.approx(SHORT1_LOWER_02_001, rel=1e-13)
    assert bracket_gul(2.0, 1e-6).lower == pytest.approx(GUL_LOWER_2_1EM6, rel=1e-13)


def _conditioned(k, c, y):
    # a price that barely moves with y cannot pin y down; skip those points
    return call_price(k, y * 1.001) - call_price(k, y / 1.001) > 1e-12


@pytest.mark.parametrize("name,fn", [
    ("cto1", bracket_cto1),
    ("gul", bracket_gul),
    ("short1", bracket_short1),
    ("best", best_bracket),
])
def test_every_bracket_contains_truth(name, fn, truth):
    checked = 0
    for (k, c), y in truth.items():
        if not _conditioned(k, c, y):
            continue
        br = fn(k, c)
        assert br.contains(y, slack=SLACK * max(1.0, y)), (name, k, c, y, br)
        checked += 1
    assert checked > 100


def test_lee_is_an_upper_bound(truth):
    for (k, c), y in truth.items():
        if _conditioned(k, c, y):
            assert upper_lee(k, c) >= y - SLACK * max(1.0, y)


def test_best_bracket_is_the_tightest(truth):
    for (k, c) in truth:
        best = best_bracket(k, c)
        for br in (bracket_cto1(k, c), bracket_gul(k, c), bracket_short1(k, c)):
            assert best.lower >= br.lower - 1e-15
            if math.isfinite(br.upper):
                assert best.upper <= br.upper + 1e-15
        assert best.upper <= upper_lee(k, c) + 1e-15


def test_best_bracket_provenance():
    br = best_bracket(0.2, 0.5)
    assert any(p.startswith("lower:") for p in br.provenance)
    assert any(p.startswith("upper:") for p in br.provenance)
    assert "routed:put-call" in best_bracket(-0.2, 0.5).provenance


def test_best_bracket_special_points():
    assert best_bracket(0.3, 0.0) == Bracket(0.0, 0.0, ("boundary",))
    y0 = best_bracket(0.0, 0.5)
    assert y0.lower == y0.upper == pytest.approx(1.3489795003921632, abs=1e-14)


def test_short1_inapplicable_cases():
    assert bracket_short1(0.0, 0.3).upper == math.inf
    # large c makes c L(k, c) exceed one
    br = bracket_short1(0.2, 0.5)
    assert br.upper == math.inf
    assert "upper:short1:inapplicable(cL>1)" in br.provenance


def test_short1_routes_negative_k():
    k, c = -0.2, intrinsic(-0.2) + 1e-3
    assert "routed:put-call" in bracket_short1(k, c).provenance


@pytest.mark.parametrize("k,c", [(0.2, 0.3), (1.0, 0.05), (-0.5, 0.5), (3.0, 1e-4)])
def test_h_objectives_minimize_to_implied_y(k, c):
    y = implied_by_bisection(k, c)
    d_star = -k / y + y / 2
    assert h1(d_star, k, c) == pytest.approx(y, abs=1e-9)
    assert h2(d_star - y, k, c) == pytest.approx(y, abs=1e-9)
    for d in np.linspace(d_star - 3, d_star + 3, 61):
        v1 = h1(float(d), k, c)
        v2 = h2(float(d), k, c)
        assert math.isnan(v1) or v1 >= y - 1e-9
        assert math.isnan(v2) or v2 >= y - 1e-9
    res = minimize_scalar(lambda d: h1(d, k, c), bracket=(d_star - 0.5, d_star + 0.5))
    assert res.fun == pytest.approx(y, abs=1e-7)


@pytest.mark.parametrize("k,c", [(0.4, 0.2), (1.5, 0.01)])
def test_h_objectives_consistent_under_put_call(k, c):
    y = implied_by_bisection(k, c)
    kk, cc = -k, math.exp(-k) * (c + math.expm1(k))
    d_star = -k / y + y / 2
    # reflected problem has the same minimum
    assert h1(-d_star + y, kk, cc) == pytest.approx(y, abs=1e-8)


def test_bracket_validation():
    with pytest.raises(ValueError):
        Bracket(2.0, 1.0)
    with pytest.raises(ValueError):
        Bracket(-1.0, 1.0)
    br = Bracket(1.0, 3.0)
    assert br.width == 2.0
    assert br.contains(3.0) and not br.contains(3.1)


@pytest.mark.parametrize("fn", [upper_cto1, lower_cto1, bracket_gul, upper_lee, best_bracket])
def test_bounds_reject_bad_prices(fn):
    with pytest.raises(DomainError):
        fn(0.2, 1.0)


def test_l_factor_domain():
    with pytest.raises(DomainError):
        l_factor(0.0, 0.1)


class TestLowerViaControls:
    k, c = 0.2, 0.3

    def truth(self):
        return implied_by_bisection(self.k, self.c)

    def optimal_control(self, u):
        # D(u) = d1 at Y(k, u); makes H_1 exact
        if u <= 0.0:
            return -math.inf
        y = implied_by_bisection(self.k, u)
        return -self.k / y + y / 2

    def test_optimal_control_is_nearly_tight(self):
        y = self.truth()
        # the outer H is evaluated at the dual price, whose optimal d is -d1(y)
        d = -self.optimal_control(self.c)
        lb = lower_via_controls(self.k, self.c, self.optimal_control, d)
        assert lb <= y + 1e-9
        assert lb > 0.97 * y

    def test_refining_the_grid_tightens_the_bound(self):
        d = -self.optimal_control(self.c)
        prev = 0.0
        for n in (33, 65, 129, 257):
            grid = np.concatenate([[0.0], np.geomspace(1e-12 * self.c, self.c, n - 1)])
            lb = lower_via_controls(self.k, self.c, self.optimal_control, d, grid=grid)
            assert prev < lb <= self.truth() + 1e-9
            prev = lb

    def test_crude_control_is_still_a_lower_bound(self):
        y = self.truth()
        lb = lower_via_controls(self.k, self.c, lambda u: quantile(max(u, 1e-300)), 0.0)
        assert 0 <= lb <= y + 1e-9

    def test_sampled_control(self):
        grid = np.linspace(0, self.c, 65)
        vals = [self.optimal_control(float(u)) for u in grid]
        lb = lower_via_controls(self.k, self.c, vals, -self.optimal_control(self.c), grid=grid)
        assert lb <= self.truth() + 1e-9

    def test_rejects_bad_inputs(self):
        with pytest.raises(DomainError):
            lower_via_controls(0.0, 0.3, lambda u: 0.0, 0.0)
        with pytest.raises(DomainError):
            lower_via_controls(0.2, 0.3, [0.0, 0.0], 0.0)
        with pytest.raises(DomainError):
            lower_via_controls(0.2, 0.3, lambda u: 0.0, 0.0, i=3)
