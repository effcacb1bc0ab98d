"""Fourier transforms with weight 1/(sqrt(t+a) (t+b)), b > a.

Same head/tail strategy as the two-radical family, but the z-integrals
carry a simple pole weight 1/(z^2+1): the infinite-range pieces are
Fresnel-integral expressions and the heads are 2F1(1, ...) series.  The
integrand is NOT symmetric in a and b, so b > a is required; other
orderings have no closed form here and callers are pointed at the
quadrature oracle.

Oracle arbitration notes (details in the errata registry):

* the printed infinite-range cosine formula carries a spurious
  +sqrt(2*pi/c) term and wrong bracket signs (it diverges as c -> 0+
  while the integral stays below pi/2); the corrected form derived
  through the complementary-error-function route is the default and
  matches quadrature at every tested c.  ``as_printed=True`` restores
  the verbatim expression.
* the sine head series, with its (2k+1)!(4k+1) denominator and
  {1 - 2F1} bracket, is correct as printed (verified against direct
  quadrature); no correction is applied.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .control import DEFAULT_CONTROL, SeriesControl
from .errors import ConvergenceError, DomainError, UnsupportedError
from .oracle import integrate_finite
from .special_functions import fresnel_c, fresnel_s, hyp2f1

__all__ = [
    "RadicalPoleParams",
    "pole_tail_sin",
    "pole_tail_cos",
    "pole_head_sin_series",
    "pole_head_cos_series",
    "pole_head_sin_approx",
    "pole_head_cos_approx",
    "pole_sin_transform",
    "pole_cos_transform",
    "approx_pole_sin_transform",
    "approx_pole_cos_transform",
]

_MAX_PHASE = 25.0


@dataclass(frozen=True)
class RadicalPoleParams:
    a: float
    b: float
    zeta: float = 1.0

    def __post_init__(self):
        if self.a <= 0 or self.b <= 0 or self.zeta <= 0:
            raise DomainError(
                f"need a, b, zeta > 0, got a={self.a} b={self.b} zeta={self.zeta}")
        if self.b <= self.a:
            raise UnsupportedError(
                f"closed form requires b > a strictly (got a={self.a}, b={self.b}); "
                "evaluate via the quadrature oracle instead")

    @property
    def c(self):
        return self.zeta * (self.b - self.a)

    @property
    def gamma(self):
        return math.sqrt(self.a / (self.b - self.a))

    @property
    def prefactor(self):
        return 2.0 / math.sqrt(self.b - self.a)


def pole_tail_sin(c: float) -> float:
    """Integral of sin(c x^2)/(x^2+1) over [0, inf)."""
    if c <= 0:
        raise DomainError(f"need c > 0, got {c}")
    w = math.sqrt(2.0 * c / math.pi)
    s, fc = fresnel_s(w), fresnel_c(w)
    return 0.5 * math.pi * (math.sin(c) * (s + fc - 1.0) - math.cos(c) * (s - fc))


def pole_tail_cos(c: float, as_printed: bool = False) -> float:
    """Integral of cos(c x^2)/(x^2+1) over [0, inf).

    Default is the oracle-validated corrected form; ``as_printed``
    reproduces the verbatim (wrong) expression, errata RP-COS-TAIL.
    """
    if c <= 0:
        raise DomainError(f"need c > 0, got {c}")
    w = math.sqrt(2.0 * c / math.pi)
    s, fc = fresnel_s(w), fresnel_c(w)
    if as_printed:
        return (0.5 * math.pi * (math.cos(c) * (s + fc + 1.0) + math.sin(c) * (s - fc))
                + math.sqrt(2.0 * math.pi / c))
    return 0.5 * math.pi * (math.cos(c) * (1.0 - s - fc) + math.sin(c) * (fc - s))


def pole_head_sin_series(c: float, gamma: float,
                         ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Integral of sin(c x^2)/(x^2+1) on [0, gamma], by series."""
    if c <= 0 or gamma < 0:
        raise DomainError(f"need c > 0 and gamma >= 0, got c={c} gamma={gamma}")
    if gamma == 0:
        return 0.0
    if c * gamma * gamma > _MAX_PHASE:
        raise ConvergenceError(
            f"head series phase c*gamma^2 = {c * gamma * gamma:.3g} too large")
    g2 = gamma * gamma
    base = -(c * c) * (g2 * g2)
    term = 1.0          # (-c^2 g^4)^k / (2k+1)!
    total = 0.0
    for k in range(ctl.max_terms):
        piece = term / (4 * k + 1) * (1.0 - hyp2f1(1.0, 2 * k + 0.5, 2 * k + 1.5, -g2, ctl))
        total += piece
        if abs(piece) < ctl.rel_tol * abs(total) + 1e-300:
            return c * gamma * total
        term *= base / ((2 * k + 2) * (2 * k + 3))
    raise ConvergenceError(f"pole_head_sin_series stalled at c={c}, gamma={gamma}")


def pole_head_cos_series(c: float, gamma: float,
                         ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Integral of cos(c x^2)/(x^2+1) on [0, gamma], by series."""
    if c <= 0 or gamma < 0:
        raise DomainError(f"need c > 0 and gamma >= 0, got c={c} gamma={gamma}")
    if gamma == 0:
        return 0.0
    if c * gamma * gamma > _MAX_PHASE:
        raise ConvergenceError(
            f"head series phase c*gamma^2 = {c * gamma * gamma:.3g} too large")
    g2 = gamma * gamma
    base = -(c * c) * (g2 * g2)
    term = 1.0          # (-c^2 g^4)^k / (2k)!
    total = 0.0
    for k in range(ctl.max_terms):
        piece = term / (4 * k + 1) * hyp2f1(1.0, 2 * k + 0.5, 2 * k + 1.5, -g2, ctl)
        total += piece
        if abs(piece) < ctl.rel_tol * abs(total):
            return gamma * total
        term *= base / ((2 * k + 1) * (2 * k + 2))
    raise ConvergenceError(f"pole_head_cos_series stalled at c={c}, gamma={gamma}")


def pole_head_sin_approx(c: float, gamma: float) -> float:
    """Leading-order sine head for gamma <= 1."""
    _check_approx_args(c, gamma)
    w = gamma * math.sqrt(2.0 * c / math.pi)
    return (gamma / (2.0 * c) * math.cos(c * gamma * gamma)
            + math.sqrt(0.5 * math.pi / c) * (fresnel_s(w) - fresnel_c(w) / (2.0 * c)))


def pole_head_cos_approx(c: float, gamma: float) -> float:
    """Leading-order cosine head for gamma <= 1 (correct as printed, but
    its error oscillates with sin(c gamma^2); see errata RP-COS-APPROX-TREND)."""
    _check_approx_args(c, gamma)
    w = gamma * math.sqrt(2.0 * c / math.pi)
    return (-gamma / (2.0 * c) * math.sin(c * gamma * gamma)
            + math.sqrt(0.5 * math.pi / c) * (fresnel_s(w) / (2.0 * c) + fresnel_c(w)))


def _check_approx_args(c, gamma):
    if c <= 0:
        raise DomainError(f"need c > 0, got {c}")
    if not 0 <= gamma <= 1:
        raise DomainError(f"approximation requires 0 <= gamma <= 1, got {gamma}")


def _head_quad(kernel_is_sin, c, gamma, ctl):
    if kernel_is_sin:
        f = lambda x: math.sin(c * x * x) / (x * x + 1.0)
    else:
        f = lambda x: math.cos(c * x * x) / (x * x + 1.0)
    return integrate_finite(f, 0.0, gamma, ctl).value


def _transform(a, b, zeta, ctl, heads_by_quadrature, approx, as_printed):
    p = RadicalPoleParams(a, b, zeta)
    c, g = p.c, p.gamma
    if approx:
        if g > 1:
            raise DomainError(
                f"approximation tier requires gamma <= 1, got gamma={g:.4g}")
        hs = pole_head_sin_approx(c, g)
        hc = pole_head_cos_approx(c, g)
    elif heads_by_quadrature:
        hs = _head_quad(True, c, g, ctl)
        hc = _head_quad(False, c, g, ctl)
    else:
        try:
            hs = pole_head_sin_series(c, g, ctl)
            hc = pole_head_cos_series(c, g, ctl)
        except ConvergenceError:
            hs = _head_quad(True, c, g, ctl)
            hc = _head_quad(False, c, g, ctl)
    ts = pole_tail_sin(c) - hs
    tc = pole_tail_cos(c, as_printed) - hc
    phase = p.a * zeta
    sin_val = p.prefactor * (math.cos(phase) * ts - math.sin(phase) * tc)
    cos_val = p.prefactor * (math.cos(phase) * tc + math.sin(phase) * ts)
    return sin_val, cos_val


def pole_sin_transform(a: float, b: float, zeta: float = 1.0,
                       ctl: SeriesControl = DEFAULT_CONTROL,
                       heads_by_quadrature: bool = False,
                       as_printed: bool = False) -> float:
    """Integral of sin(zeta t)/(sqrt(t+a)(t+b)) over [0, inf), b > a."""
    return _transform(a, b, zeta, ctl, heads_by_quadrature, False, as_printed)[0]


def pole_cos_transform(a: float, b: float, zeta: float = 1.0,
                       ctl: SeriesControl = DEFAULT_CONTROL,
                       heads_by_quadrature: bool = False,
                       as_printed: bool = False) -> float:
    """Integral of cos(zeta t)/(sqrt(t+a)(t+b)) over [0, inf), b > a."""
    return _transform(a, b, zeta, ctl, heads_by_quadrature, False, as_printed)[1]


def approx_pole_sin_transform(a: float, b: float, zeta: float = 1.0) -> float:
    """Assembly with the leading-order heads; requires gamma <= 1."""
    return _transform(a, b, zeta, DEFAULT_CONTROL, False, True, False)[0]


def approx_pole_cos_transform(a: float, b: float, zeta: float = 1.0) -> float:
    """Assembly with the leading-order heads; requires gamma <= 1."""
    return _transform(a, b, zeta, DEFAULT_CONTROL, False, True, False)[1]
