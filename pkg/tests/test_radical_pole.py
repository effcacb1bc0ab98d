"""Radical-pole transforms, including the arbitrated cosine tail."""

import math

import pytest

from oscint import (
    DomainError,
    UnsupportedError,
    pole_cos_transform,
    pole_head_cos_series,
    pole_head_sin_approx,
    pole_head_sin_series,
    pole_sin_transform,
    pole_tail_cos,
    pole_tail_sin,
)
from oscint.radical_pole import RadicalPoleParams


def test_tail_goldens():
    assert abs(pole_tail_sin(1.0) - 0.36178547627943458) < 1e-12
    assert abs(pole_tail_cos(1.0) - 0.65280425451173388) < 1e-12


def test_tail_large_c_trend():
    assert abs(pole_tail_sin(100.0)) < abs(pole_tail_sin(10.0))
    assert abs(pole_tail_cos(100.0)) < abs(pole_tail_cos(10.0))


def test_cos_tail_printed_form_is_wrong():
    # the verbatim expression (frozen value) diverges from the integral
    printed = pole_tail_cos(1.0, as_printed=True)
    assert abs(printed - 3.55123377495223979) < 1e-12
    assert abs(printed - pole_tail_cos(1.0)) > 2.0
    # and blows up as c -> 0 while the true value stays below pi/2
    assert pole_tail_cos(1e-4, as_printed=True) > 100.0
    assert abs(pole_tail_cos(1e-4)) < 0.5 * math.pi + 1e-9


def test_head_goldens():
    assert pole_head_sin_series(1.0, 0.0) == 0.0
    assert abs(pole_head_sin_series(1.0, 1.0) - 0.20146279818617942) < 1e-11
    assert abs(pole_head_cos_series(1.0, 1.0) - 0.72854189218190569) < 1e-11


def test_head_cos_small_c_is_arctan():
    # as c -> 0 the cosine head tends to arctan(gamma); at gamma=1 the
    # k=0 hypergeometric factor is exactly the pi/4 identity
    assert abs(pole_head_cos_series(1e-9, 1.0) - 0.25 * math.pi) < 1e-8


def test_transform_goldens():
    assert abs(pole_sin_transform(1.0, 2.0, 1.0) - 0.30070747442816873) < 5e-9
    assert abs(pole_cos_transform(1.0, 2.0, 1.0) - 0.18797132309594257) < 5e-9
    assert abs(pole_sin_transform(0.5, 4.0, 2.0) - 0.13429487690027575) < 5e-9
    assert abs(pole_cos_transform(0.5, 4.0, 2.0) - 0.052851538884076603) < 5e-9


def test_no_closed_form_outside_b_gt_a():
    with pytest.raises(UnsupportedError):
        pole_sin_transform(2.0, 1.0, 1.0)
    with pytest.raises(UnsupportedError):
        pole_cos_transform(1.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        RadicalPoleParams(-1.0, 2.0, 1.0)


def test_as_printed_propagates_into_assembly():
    ok = pole_sin_transform(1.0, 2.0, 1.0)
    bad = pole_sin_transform(1.0, 2.0, 1.0, as_printed=True)
    assert abs(ok - bad) > 0.1


def test_approx_head_sanity():
    assert pole_head_sin_approx(5.0, 0.0) == 0.0
    with pytest.raises(DomainError):
        pole_head_sin_approx(5.0, 1.0001)
    # at large c and small gamma the approximation is tight
    c, g = 40.0, 0.3
    assert abs(pole_head_sin_approx(c, g) / pole_head_sin_series(c, g) - 1.0) < 2e-2
