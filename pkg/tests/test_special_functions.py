"""Special-function backends: frozen goldens and identity properties.

Golden values were generated with 25-digit arbitrary-precision
arithmetic (series/quadrature definitions evaluated independently of
the library) and frozen here.
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oscint import (
    ConvergenceError,
    DomainError,
    PoleError,
    SeriesControl,
    bessel_j0,
    bessel_y0,
    fresnel_c,
    fresnel_s,
    gamma_real,
    gen_ci,
    gen_si,
    hyp2f1,
    hyp2f2_half,
    integrate_finite,
    upper_incomplete_gamma,
)
from oscint.special_functions import EULER_GAMMA, _gauss_series

SQRT_PI = math.sqrt(math.pi)


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


# ---------------------------------------------------------------- Fresnel

def test_fresnel_at_zero():
    assert fresnel_s(0.0) == 0.0
    assert fresnel_c(0.0) == 0.0


@pytest.mark.parametrize("z, want_s, want_c", [
    (0.8, 0.24934139305391778, 0.72284417189635612),
    (1.3, 0.68633328553465011, None),
    (2.4, None, 0.55496140585642813),
])
def test_fresnel_goldens(z, want_s, want_c):
    if want_s is not None:
        assert abs(fresnel_s(z) - want_s) < 1e-13
    if want_c is not None:
        assert abs(fresnel_c(z) - want_c) < 1e-13


def test_fresnel_against_finite_quadrature():
    # cross-module: the defining integral on [0, 0.8]
    got = integrate_finite(lambda t: math.sin(0.5 * math.pi * t * t), 0.0, 0.8)
    assert abs(got.value - fresnel_s(0.8)) < 1e-12


def test_fresnel_c_limit_and_decay():
    assert abs(fresnel_c(10.0) - 0.5) < 0.04
    assert abs(fresnel_c(20.0) - 0.5) < abs(fresnel_c(10.0) - 0.5)


@given(st.floats(min_value=-50.0, max_value=50.0))
@settings(max_examples=60, deadline=None)
def test_fresnel_odd_and_bounded(z):
    assert fresnel_s(-z) == -fresnel_s(z)
    assert fresnel_c(-z) == -fresnel_c(z)
    assert abs(fresnel_s(z)) < 0.9
    assert abs(fresnel_c(z)) < 0.9


# ---------------------------------------------------------------- Bessel

def test_j0_at_zero():
    assert bessel_j0(0.0) == 1.0


def test_j0_first_zero_by_series_bisection():
    # locate the first zero of the plain ascending series by bisection,
    # then check the library value against the classical constant
    def series(z):
        q = 0.25 * z * z
        term, total = 1.0, 1.0
        for k in range(1, 60):
            term *= -q / (k * k)
            total += term
        return total

    lo, hi = 2.0, 3.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if series(lo) * series(mid) <= 0:
            hi = mid
        else:
            lo = mid
    z0 = 0.5 * (lo + hi)
    assert abs(z0 - 2.404825557695773) < 1e-9
    assert abs(bessel_j0(2.404825557695773)) < 1e-9


@pytest.mark.parametrize("z, want", [
    (1.0, 0.088256964215676958),
    (2.0, 0.51037567264974512),
    (5.0, -0.30851762524903378),
])
def test_y0_goldens(z, want):
    assert abs(bessel_y0(z) - want) < 1e-12


def test_y0_domain():
    with pytest.raises(DomainError):
        bessel_y0(0.0)
    with pytest.raises(DomainError):
        bessel_y0(-1.0)
    with pytest.raises(DomainError):
        bessel_j0(-0.1)


def test_bessel_branch_consistency():
    # values must join smoothly across the series/asymptotic split at 14
    for z in (13.999999, 14.000001):
        assert abs(bessel_j0(z) - bessel_j0(14.0)) < 1e-6
        assert abs(bessel_y0(z) - bessel_y0(14.0)) < 1e-6


# ---------------------------------------------------------------- gamma

def test_gamma_classical_values():
    assert rel(gamma_real(0.5), SQRT_PI) < 1e-15
    assert rel(gamma_real(2.5), 0.75 * SQRT_PI) < 1e-14
    assert gamma_real(1.0) == 1.0


def test_gamma_poles():
    for x in (0.0, -1.0, -5.0):
        with pytest.raises(PoleError):
            gamma_real(x)


@given(st.floats(min_value=0.05, max_value=60.0))
@settings(max_examples=80, deadline=None)
def test_gamma_recurrence(x):
    assert rel(gamma_real(x + 1.0), x * gamma_real(x)) < 1e-13


# ------------------------------------------------- incomplete gamma

def test_incomplete_gamma_trivials():
    got = upper_incomplete_gamma(1.0, 1j)
    want = complex(math.cos(1.0), -math.sin(1.0))
    assert abs(got - want) < 1e-13
    # small positive real z approaches the complete function for a > 0
    assert abs(upper_incomplete_gamma(0.5, 1e-12) - SQRT_PI) < 3e-6


def test_incomplete_gamma_negative_half_golden():
    got = upper_incomplete_gamma(-0.5, 1j)
    want = complex(-0.53487236211877285, -0.27331291887479215)
    assert abs(got - want) < 1e-11 * abs(want)


def test_incomplete_gamma_domain():
    with pytest.raises(DomainError):
        upper_incomplete_gamma(-1.0, 0.0)
    assert upper_incomplete_gamma(2.0, 0.0) == complex(1.0)


@pytest.mark.parametrize("a", [-1.5, -0.5, 0.5, 1.5])
@pytest.mark.parametrize("y", [0.5, 1.0, 5.0])
@pytest.mark.parametrize("sign", [1.0, -1.0])
def test_incomplete_gamma_recurrence_grid(a, y, sign):
    z = complex(0.0, sign * y)
    lhs = upper_incomplete_gamma(a + 1.0, z)
    rhs = a * upper_incomplete_gamma(a, z) + z ** a * _cexp(-z)
    assert abs(lhs - rhs) <= 1e-10 * max(abs(lhs), abs(rhs))


def _cexp(z):
    return complex(math.exp(z.real) * math.cos(z.imag),
                   math.exp(z.real) * math.sin(z.imag))


@given(st.floats(min_value=-2.5, max_value=2.5),
       st.floats(min_value=0.05, max_value=25.0))
@settings(max_examples=60, deadline=None)
def test_incomplete_gamma_conjugate_symmetry(a, y):
    z = complex(0.0, y)
    left = upper_incomplete_gamma(a, z.conjugate())
    right = upper_incomplete_gamma(a, z).conjugate()
    assert abs(left - right) <= 1e-10 * max(abs(left), 1e-30)


def test_incomplete_gamma_integer_descent():
    # integer a <= 0 goes through the exponential-integral route for small |z|
    got = upper_incomplete_gamma(-1.0, 0.25j)
    rec = (upper_incomplete_gamma(0.0, 0.25j) - _cexp(-0.25j) / 0.25j) / -1.0
    assert abs(got - rec) < 1e-12 * abs(got)


# ---------------------------------------------------------------- 2F1

def test_hyp2f1_at_zero():
    assert hyp2f1(0.3, 1.7, 2.2, 0.0) == 1.0


def test_hyp2f1_known_values():
    assert rel(hyp2f1(0.5, 0.5, 1.5, -1.0), math.log(1.0 + math.sqrt(2.0))) < 1e-11
    assert rel(hyp2f1(1.0, 0.5, 1.5, -1.0), 0.25 * math.pi) < 1e-11


def test_hyp2f1_pfaff_vs_direct():
    ctl = SeriesControl(1e-15, 4000)
    for (a, b, c) in [(0.5, 1.5, 2.5), (1.0, 0.5, 1.5), (0.5, 3.5, 4.5)]:
        direct = _gauss_series(a, b, c, -0.9, ctl)
        assert rel(hyp2f1(a, b, c, -0.9), direct) < 1e-11


def test_hyp2f1_domain():
    with pytest.raises(DomainError):
        hyp2f1(0.5, 0.5, 1.5, 0.25)
    with pytest.raises(PoleError):
        hyp2f1(0.5, 0.5, 0.0, -0.5)


# ---------------------------------------------------------------- 2F2

def test_hyp2f2_trivial_and_golden():
    assert hyp2f2_half(0.0) == complex(1.0)
    got = hyp2f2_half(1.0)
    want = complex(0.98050627021181737, 0.10777774684256268)
    assert abs(got - want) < 1e-12
    # real coefficients force conjugate symmetry
    assert abs(hyp2f2_half(-1.0) - got.conjugate()) < 1e-15


def test_hyp2f2_budget():
    with pytest.raises(ConvergenceError):
        hyp2f2_half(1.0, SeriesControl(rel_tol=1e-12, max_terms=2))


# ----------------------------------------------- generalized si / ci

def test_gen_si_dirichlet_limit():
    assert abs(gen_si(0.0, 1e-8) - 0.5 * math.pi) < 1e-7


def test_gen_si_ci_goldens():
    assert abs(gen_si(0.5, 1.0) - 0.63277753386873805) < 1e-9
    assert abs(gen_ci(0.5, 1.0) - (-0.55573433848504391)) < 1e-9


def test_gen_ci_against_classical_ci():
    # Ci(z) by its own log series; gen_ci(0, z) must be its negative
    z = 2.0
    total = 0.0
    term = 1.0
    for k in range(1, 40):
        term *= -z * z / ((2 * k - 1) * (2 * k))
        total += term / (2 * k)
    ci = EULER_GAMMA + math.log(z) + total
    assert abs(gen_ci(0.0, z) + ci) < 1e-9


def test_gen_si_domain():
    with pytest.raises(DomainError):
        gen_si(1.0, 1.0)
    with pytest.raises(DomainError):
        gen_ci(0.5, 0.0)


def test_gen_si_additivity():
    mid = integrate_finite(lambda t: math.sin(t) / math.sqrt(t), 1.0, 3.0).value
    assert abs(gen_si(0.5, 1.0) - (mid + gen_si(0.5, 3.0))) < 1e-9
