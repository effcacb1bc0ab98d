"""Lommel bridge: gamma realization, recurrence, representations, log integral."""

import math

import pytest

from oscint import (
    DomainError,
    GeneralExponent,
    Kernel,
    LommelOrder,
    cos_exponent_transform,
    general_cos_transform,
    general_sin_transform,
    log_weighted_sin_integral,
    log_weighted_sin_integral_fd,
    lommel_s_half,
    pre_reduction_values,
    s0,
    si_ci_representation,
    sin_exponent_transform,
)


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def test_structural_identity_with_base_form():
    # order zero carries exactly the exponent-1/2 sine transform
    assert rel(lommel_s_half(0.0, 1.0), s0(1.0, 1.0)) < 1e-10
    assert rel(lommel_s_half(0.0, 2.0) * math.sqrt(2.0), s0(2.0, 1.0)) < 1e-10


def test_lommel_relation_example():
    mu, z = -1.5, 2.0
    lhs = z ** (mu + 1.5) - math.sqrt(z) * lommel_s_half(mu + 2.0, z)
    rhs = ((mu + 1.0) ** 2 - 0.25) * math.sqrt(z) * lommel_s_half(mu, z)
    scale = max(abs(z ** (mu + 1.5)), abs(rhs), 1e-300)
    assert abs(lhs - rhs) / scale < 1e-9


def test_exponent_transform_goldens():
    assert abs(sin_exponent_transform(1.0 / 3.0, 1.0) - 0.87525528672218002) < 1e-8
    assert abs(sin_exponent_transform(1.0, 1.0) - 0.62144962423581336) < 1e-10
    assert abs(sin_exponent_transform(7.0 / 3.0, 1.0) - 0.28067560487509496) < 1e-8
    assert abs(cos_exponent_transform(2.0, 1.0) - 0.37855037576418664) < 1e-8


def test_general_transforms():
    # n=0, m=2 is the base family
    assert rel(general_sin_transform(0, 2, 1.0, 1.0), s0(1.0, 1.0)) < 1e-10
    assert rel(general_sin_transform(0, 2, 2.0, 0.5), s0(2.0, 0.5)) < 1e-10
    assert abs(general_sin_transform(1, 3, 1.0, 1.0) - 0.28067560487509496) < 1e-8
    assert abs(general_cos_transform(0, 1, 1.0, 1.0, plus_one=True)
               - 0.37855037576418664) < 1e-8


def test_printed_gamma_order_fails_the_defining_integral():
    ok = lommel_s_half(0.0, 1.0)
    bad = lommel_s_half(0.0, 1.0, as_printed=True)
    assert abs(ok - bad) > 0.1
    assert rel(ok, s0(1.0, 1.0)) < 1e-10


def test_si_ci_representation():
    assert rel(si_ci_representation(0, 2, 1.0, 1.0, Kernel.SIN), s0(1.0, 1.0)) < 1e-9
    got = si_ci_representation(0, 1, 1.0, 2.0, Kernel.COS)
    assert abs(got - 0.14454530303733242) < 1e-9
    got = si_ci_representation(0, 1, 1.0, 2.0, Kernel.SIN)
    assert abs(got - 0.39902098859418385) < 1e-9
    printed = si_ci_representation(0, 1, 1.0, 2.0, Kernel.SIN, as_printed=True)
    assert abs(printed - 0.37033170393665074) < 1e-9
    # at zeta = 1 the phase erratum is invisible and routes agree
    assert rel(si_ci_representation(1, 2, 1.0, 1.0, Kernel.SIN),
               general_sin_transform(1, 2, 1.0, 1.0)) < 1e-9


def test_pre_reduction_forms_match_reduced():
    pre = pre_reduction_values(1, 2, 1.5, 0.5)
    assert rel(pre[(Kernel.SIN, False)], general_sin_transform(1, 2, 1.5, 0.5)) < 1e-10
    assert rel(pre[(Kernel.COS, False)], general_cos_transform(1, 2, 1.5, 0.5)) < 1e-10
    assert rel(pre[(Kernel.SIN, True)],
               general_sin_transform(1, 2, 1.5, 0.5, plus_one=True)) < 1e-10
    assert rel(pre[(Kernel.COS, True)],
               general_cos_transform(1, 2, 1.5, 0.5, plus_one=True)) < 1e-10
    with pytest.raises(DomainError):
        pre_reduction_values(0, 1, 1.0, 1.0)      # q = 1 is singular here


def test_log_integral():
    got = log_weighted_sin_integral(1.0)
    assert abs(got - 0.39410320685967553) < 1e-9
    assert abs(log_weighted_sin_integral(0.5) - 0.16177546871628293) < 1e-9
    assert abs(log_weighted_sin_integral(2.0) - 0.59372118407733654) < 1e-9
    # Euler-Mascheroni enters the closed form as printed
    from oscint import EULER_GAMMA
    assert abs(EULER_GAMMA - 0.5772156649) < 1e-9


def test_log_integral_finite_difference_cross_check():
    for x in (0.5, 1.0, 2.0):
        closed = log_weighted_sin_integral(x)
        fd = log_weighted_sin_integral_fd(x)
        assert abs(closed - fd) < 1e-5


def test_domain_types():
    with pytest.raises(DomainError):
        LommelOrder(0.0, 0.6)                     # mu + alpha != 1/2
    assert LommelOrder.from_exponent(0.5).mu == 0.0
    with pytest.raises(DomainError):
        GeneralExponent(-1, 2)
    with pytest.raises(DomainError):
        GeneralExponent(0, 0)
    assert GeneralExponent(1, 3).exponent(True) == pytest.approx(2 + 1.0 / 3.0 + 1.0)
    with pytest.raises(DomainError):
        sin_exponent_transform(0.5, -1.0)
    with pytest.raises(DomainError):
        lommel_s_half(0.0, 0.0)


def test_integer_exponent_routes():
    # m=1 drives the incomplete gamma through integer orders (E1 descent)
    assert abs(general_sin_transform(0, 1, 0.5, 0.5) - 0.0) != 0.0
    v = general_sin_transform(1, 1, 1.0, 1.0)     # exponent 3
    w = sin_exponent_transform(3.0, 1.0, 1.0)
    assert v == w
