"""Two-radical transforms: tails, heads, assembly, approximations."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oscint import (
    ConvergenceError,
    DomainError,
    SeriesControl,
    approx_cos_transform,
    approx_sin_transform,
    cos_transform,
    head_cos_approx,
    head_cos_series,
    head_sin_approx,
    head_sin_series,
    sin_transform,
    tail_cos,
    tail_sin,
)
from oscint.two_radical import TwoRadicalParams

J0_1 = 0.76519768655796655
Y0_1 = 0.088256964215676958


def test_tail_formulas_at_c2():
    # c=2 puts the Bessel argument at 1, where goldens are frozen
    want_sin = 0.25 * math.pi * (math.sin(1.0) * Y0_1 + math.cos(1.0) * J0_1)
    want_cos = 0.25 * math.pi * (math.sin(1.0) * J0_1 - math.cos(1.0) * Y0_1)
    assert abs(tail_sin(2.0) - want_sin) < 1e-12
    assert abs(tail_cos(2.0) - want_cos) < 1e-12


def test_tail_domain():
    with pytest.raises(DomainError):
        tail_sin(0.0)
    with pytest.raises(DomainError):
        tail_cos(-1.0)


def test_heads_trivial_and_golden():
    assert head_sin_series(1.0, 0.0) == 0.0
    assert head_cos_series(1.0, 0.0) == 0.0
    assert abs(head_sin_series(1.0, 1.0) - 0.24903800968862944) < 1e-11
    assert abs(head_cos_series(1.0, 1.0) - 0.80787037287786862) < 1e-11


def test_head_series_budget():
    with pytest.raises(ConvergenceError):
        head_sin_series(100.0, 1.0)         # phase too large for doubles
    with pytest.raises(ConvergenceError):
        head_cos_series(2.0, 1.0, SeriesControl(rel_tol=1e-12, max_terms=1))


def test_head_approx_trivials():
    assert head_sin_approx(5.0, 0.0) == 0.0
    with pytest.raises(DomainError):
        head_sin_approx(5.0, 1.2)
    with pytest.raises(DomainError):
        head_cos_approx(0.0, 0.5)


def test_head_cos_approx_printed_coefficient():
    # verbatim prefactor is -g/c, corrected is -g/(4c)
    c, g = 10.0, 0.5
    diff = head_cos_approx(c, g, as_printed=True) - head_cos_approx(c, g)
    want = -(g / c - g / (4.0 * c)) * math.sin(c * g * g)
    assert abs(diff - want) < 1e-15


def test_transform_goldens():
    assert abs(sin_transform(1.0, 2.0, 1.0) - 0.49826494947386386) < 5e-9
    assert abs(cos_transform(1.0, 2.0, 1.0) - 0.22773934152826046) < 5e-9


def test_equal_constants_route():
    # a = b collapses to a single pole handled via generalized si/ci
    assert abs(sin_transform(1.0, 1.0, 1.0) - 0.62144962423581336) < 1e-9
    want = (math.cos(1.0) * (0.5 * math.pi - 0.94608307036718301)
            + math.sin(1.0) * 0.33740392290096813)
    assert abs(sin_transform(1.0, 1.0, 1.0) - want) < 1e-9


def test_swap_symmetry_exact():
    assert sin_transform(2.0, 1.0, 1.0) == sin_transform(1.0, 2.0, 1.0)
    assert cos_transform(4.0, 0.5, 2.0) == cos_transform(0.5, 4.0, 2.0)


def test_params_canonicalization():
    p = TwoRadicalParams(3.0, 1.0, 1.0)
    assert (p.a, p.b) == (1.0, 3.0)
    assert p.gamma == math.sqrt(0.5)
    with pytest.raises(DomainError):
        TwoRadicalParams(1.0, -2.0, 1.0)


def test_gamma_above_one_uses_pfaff_route():
    # b < 2a puts the hypergeometric argument outside the unit disk
    p = TwoRadicalParams(1.0, 1.5, 1.0)
    assert p.gamma > 1
    v = sin_transform(1.0, 1.5, 1.0)
    q = sin_transform(1.0, 1.5, 1.0, heads_by_quadrature=True)
    assert abs(v - q) < 1e-10 * max(1.0, abs(v))


def test_approx_transform_requires_small_gamma():
    with pytest.raises(DomainError):
        approx_sin_transform(1.0, 1.5, 1.0)      # gamma = sqrt(2) > 1
    v = approx_cos_transform(0.5, 4.0, 2.0)      # gamma = 0.378
    assert abs(v - cos_transform(0.5, 4.0, 2.0)) < 0.05


@given(st.floats(min_value=0.1, max_value=5.0),
       st.floats(min_value=0.1, max_value=5.0))
@settings(max_examples=40, deadline=None)
def test_swap_symmetry_property(a, b):
    assert sin_transform(a, b, 1.0) == sin_transform(b, a, 1.0)
