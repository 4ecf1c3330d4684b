import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ivbounds.errors import DomainError
from ivbounds.normal import cdf, mills_bound, pdf, quantile, scaled_upper_tail

from oracles import cdf_by_quadrature, quantile_by_bisection, scaled_tail_by_quadrature

# frozen from oracles.py (closed form / quadrature / bisection)
PDF_AT_1 = 0.24197072451914337
CDF_AT_1 = 0.841344746068543
Q_0975 = 1.9599639845400532


def test_pdf_values():
    assert pdf(0.0) == pytest.approx(1 / math.sqrt(2 * math.pi), abs=1e-16)
    assert pdf(1.0) == pytest.approx(PDF_AT_1, abs=1e-16)


@given(st.floats(-30, 30))
def test_pdf_even(x):
    assert pdf(x) == pdf(-x)


def test_cdf_values():
    assert cdf(0.0) == 0.5
    assert cdf(1.0) == pytest.approx(CDF_AT_1, abs=1e-15)
    assert cdf(math.inf) == 1.0
    assert cdf(-math.inf) == 0.0


@pytest.mark.parametrize("x", [-7.5, -3.0, -0.4, 0.9, 2.5, 6.0])
def test_cdf_matches_quadrature(x):
    assert cdf(x) == pytest.approx(cdf_by_quadrature(x), abs=1e-15)


@given(st.floats(-40, 40))
def test_cdf_reflection(x):
    assert abs(cdf(x) + cdf(-x) - 1.0) <= 1e-15


def test_cdf_nondecreasing():
    xs = np.linspace(-38, 38, 4001)
    vals = [cdf(float(x)) for x in xs]
    assert all(b >= a for a, b in zip(vals, vals[1:]))


def test_cdf_lower_tail_is_relative_accurate():
    # Phi(-x) ~ phi(x)/x (1 - 1/x^2 + 3/x^4) for large x
    x = 30.0
    approx = pdf(x) / x * (1 - 1 / x**2 + 3 / x**4 - 15 / x**6)
    assert cdf(-x) == pytest.approx(approx, rel=1e-9)


def test_quantile_values():
    assert quantile(0.5) == 0.0
    assert quantile(0.975) == pytest.approx(Q_0975, abs=1e-12)


@pytest.mark.parametrize("p", [1.0, 1.2, 7.0, math.inf])
def test_quantile_plus_infinity_convention(p):
    assert quantile(p) == math.inf


@pytest.mark.parametrize("p", [0.0, -0.3, -math.inf])
def test_quantile_minus_infinity_convention(p):
    assert quantile(p) == -math.inf


def test_quantile_nan_rejected():
    with pytest.raises(DomainError):
        quantile(math.nan)


@pytest.mark.parametrize("p", [1e-300, 1e-100, 1e-20, 1e-6, 0.01, 0.3, 0.77, 0.999, 1 - 1e-12])
def test_quantile_matches_bisection(p):
    assert quantile(p) == pytest.approx(quantile_by_bisection(p), abs=1e-12)


def test_quantile_round_trip_log_grid():
    lower = np.logspace(-300, math.log10(0.5), 600)
    upper = 1.0 - np.logspace(-16, math.log10(0.5), 200)
    for p in np.concatenate([lower, upper]):
        p = float(p)
        assert abs(cdf(quantile(p)) - p) <= 1e-12


def test_quantile_strictly_increasing():
    ps = np.concatenate([np.logspace(-300, -1, 400), np.linspace(0.1, 0.9, 200)[1:-1], 1 - np.logspace(-1, -15, 200)])
    qs = [quantile(float(p)) for p in ps]
    assert all(b > a for a, b in zip(qs, qs[1:]))


@pytest.mark.parametrize("eps", [1e-4, 1e-8, 1e-16, 1e-32])
def test_quantile_square_asymptotics(eps):
    q = quantile(eps)
    assert abs(q * q + 2 * math.log(eps)) <= 3 * math.log(-math.log(eps))


def test_mills_bound_values():
    assert mills_bound(1 / (4 * math.pi)) == pytest.approx(1.0, rel=1e-15)
    assert mills_bound(1.0) == pytest.approx(0.28209479177387814, rel=1e-15)


@pytest.mark.parametrize("x", [0.0, -1.0])
def test_mills_bound_domain(x):
    with pytest.raises(DomainError):
        mills_bound(x)


def test_mills_bound_dominates_scaled_tail():
    for x in list(range(1, 11)) + list(np.geomspace(1e-3, 1e4, 60)):
        x = float(x)
        assert scaled_upper_tail(x) <= mills_bound(x)
        assert scaled_upper_tail(x) == pytest.approx(scaled_tail_by_quadrature(x), rel=1e-12)


def test_mills_bound_is_sharp_for_large_x():
    assert scaled_upper_tail(1e6) / mills_bound(1e6) == pytest.approx(1.0, abs=1e-6)
