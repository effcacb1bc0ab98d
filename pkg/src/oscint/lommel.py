"""General-exponent transforms through Lommel functions of the second kind.

Only the second index 1/2 appears; S_{mu,1/2} is DEFINED computationally
by its incomplete-gamma realization

    sqrt(x) S_{1/2-alpha,1/2}(x)
        = integral of sin(t)/(t+x)^alpha over [0, inf)
        = Re[ exp(+i(pi*alpha + 2x)/2) Gamma(1-alpha, ix) ],

a conjugate-symmetric combination whose imaginary residue is checked on
every call.  The verbatim printed identity uses Gamma(-alpha, .); that
fails the defining integral (errata LOM-GAMMA-ORDER) and the corrected
order 1-alpha ships as default, with ``as_printed=True`` available.

On top of that definition sit: the sine/cosine transforms for exponents
2n + 1/m and 2n + 1 + 1/m (both the reduced summary forms and the
pre-reduction forms related by the Lommel recurrence), the logarithmic
integral obtained as the order-derivative at exponent 1/2 (closed form
via 2F2, plus a finite-difference fallback for regression), and the
equivalent representation through generalized sine/cosine integrals.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .control import DEFAULT_CONTROL, SeriesControl
from .errors import ConvergenceError, DomainError
from .oracle import Kernel
from .special_functions import (
    EULER_GAMMA,
    gen_ci,
    gen_si,
    hyp2f2_half,
    upper_incomplete_gamma,
)

__all__ = [
    "LommelOrder",
    "GeneralExponent",
    "lommel_s_half",
    "sin_exponent_transform",
    "cos_exponent_transform",
    "general_sin_transform",
    "general_cos_transform",
    "pre_reduction_values",
    "log_weighted_sin_integral",
    "log_weighted_sin_integral_fd",
    "si_ci_representation",
]


@dataclass(frozen=True)
class LommelOrder:
    """First Lommel index mu and the integrand exponent it encodes."""

    mu: float
    exponent_alpha: float

    def __post_init__(self):
        if abs(self.mu + self.exponent_alpha - 0.5) > 1e-12:
            raise DomainError(
                f"inconsistent order: mu + alpha must be 1/2, got {self.mu} + {self.exponent_alpha}")
        if self.exponent_alpha <= 0:
            raise DomainError(
                f"defining integral diverges for exponent alpha = {self.exponent_alpha} <= 0")

    @classmethod
    def from_mu(cls, mu):
        return cls(mu, 0.5 - mu)

    @classmethod
    def from_exponent(cls, alpha):
        return cls(0.5 - alpha, alpha)


@dataclass(frozen=True)
class GeneralExponent:
    """Exponent family 2n + 1/m (or 2n + 1 + 1/m with plus_one)."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.n != int(self.n):
            raise DomainError(f"n must be a nonnegative integer, got {self.n}")
        if self.m < 1 or self.m != int(self.m):
            raise DomainError(f"m must be a positive integer, got {self.m}")

    def exponent(self, plus_one=False):
        return 2 * self.n + 1.0 / self.m + (1.0 if plus_one else 0.0)


def lommel_s_half(mu: float, z: float, ctl: SeriesControl = DEFAULT_CONTROL,
                  as_printed: bool = False) -> float:
    """Lommel function of the second kind S_{mu,1/2}(z), z > 0.

    For mu < 1/2 this equals the defining transform integral divided by
    sqrt(z); for mu >= 1/2 the incomplete-gamma realization continues it
    analytically (needed by the Lommel recurrence, which raises mu by 2).
    """
    if z <= 0:
        raise DomainError(f"lommel_s_half needs z > 0, got {z}")
    alpha = 0.5 - mu
    a_gamma = -alpha if as_printed else 1.0 - alpha
    phase = cmath.exp(-0.5j * (math.pi * alpha + 2.0 * z))
    g_minus = upper_incomplete_gamma(a_gamma, complex(0.0, -z), ctl)
    g_plus = upper_incomplete_gamma(a_gamma, complex(0.0, z), ctl)
    val = 0.5 * (phase * g_minus + phase.conjugate() * g_plus)
    tol = max(1e-12, 10.0 * ctl.rel_tol)
    if abs(val.imag) > tol * abs(val) + 1e-15:
        raise ConvergenceError(
            f"conjugate symmetry violated at mu={mu}, z={z}: residue {val.imag:.3e}")
    return val.real / math.sqrt(z)


def sin_exponent_transform(p: float, x: float, zeta: float = 1.0,
                           ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Integral of sin(zeta t)/(t+x)^p over [0, inf), any real p > 0, x > 0."""
    if x <= 0:
        raise DomainError(f"need x > 0, got {x}")
    if zeta <= 0:
        raise DomainError(f"need zeta > 0, got {zeta}")
    order = LommelOrder.from_exponent(p)
    u = zeta * x
    return zeta ** (p - 1.0) * math.sqrt(u) * lommel_s_half(order.mu, u, ctl)


def cos_exponent_transform(p: float, x: float, zeta: float = 1.0,
                           ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Integral of cos(zeta t)/(t+x)^p over [0, inf), any real p > 0, x > 0."""
    if x <= 0:
        raise DomainError(f"need x > 0, got {x}")
    if zeta <= 0:
        raise DomainError(f"need zeta > 0, got {zeta}")
    if p <= 0:
        raise DomainError(f"need exponent p > 0, got {p}")
    u = zeta * x
    return zeta ** (p - 1.0) * p * math.sqrt(u) * lommel_s_half(-(p + 0.5), u, ctl)


def general_sin_transform(n: int, m: int, x: float, zeta: float = 1.0,
                          plus_one: bool = False,
                          ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Sine transform for exponent 2n+1/m (or 2n+1+1/m with plus_one)."""
    p = GeneralExponent(n, m).exponent(plus_one)
    return sin_exponent_transform(p, x, zeta, ctl)


def general_cos_transform(n: int, m: int, x: float, zeta: float = 1.0,
                          plus_one: bool = False,
                          ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Cosine transform for exponent 2n+1/m (or 2n+1+1/m with plus_one)."""
    p = GeneralExponent(n, m).exponent(plus_one)
    return cos_exponent_transform(p, x, zeta, ctl)


def pre_reduction_values(n: int, m: int, x: float, zeta: float = 1.0,
                         ctl: SeriesControl = DEFAULT_CONTROL) -> dict:
    """The four transforms in their pre-reduction shape.

    These are the forms carrying the bracketed 1/(zeta x)^... -
    sqrt(zeta x) S_... structure; the Lommel recurrence collapses them to
    the reduced forms returned by general_{sin,cos}_transform, and the
    two must agree identically.  Keys: (kernel, plus_one).  q = 2n + 1/m
    must differ from 1 (the pre-reduction cosine forms divide by q - 1).
    """
    q = GeneralExponent(n, m).exponent(False)
    if abs(q - 1.0) < 1e-12:
        raise DomainError("pre-reduction forms are singular at exponent q = 1")
    u = zeta * x
    ru = math.sqrt(u)

    def s_half(mu):
        return lommel_s_half(mu, u, ctl)

    sin_base = zeta ** (q - 1.0) * ru * s_half(-(q - 0.5))
    bracket_lo = u ** (-(q - 1.0)) - ru * s_half(-(q - 1.5))
    cos_base = zeta ** (q - 1.0) / (q - 1.0) * bracket_lo
    sin_plus = zeta ** q / ((q - 1.0) * q) * bracket_lo
    cos_plus = zeta ** q / q * (u ** -q - ru * s_half(-(q - 0.5)))
    return {
        (Kernel.SIN, False): sin_base,
        (Kernel.COS, False): cos_base,
        (Kernel.SIN, True): sin_plus,
        (Kernel.COS, True): cos_plus,
    }


def log_weighted_sin_integral(x: float, ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Integral of ln(t+x) sin(t)/(t+x)^(1/2) over [0, inf), x > 0.

    The closed form is the negative of the order-derivative of the
    exponent family at 1/2, expressed through 2F2(1/2,1/2;3/2,3/2;ix).
    """
    if x <= 0:
        raise DomainError(f"need x > 0, got {x}")
    rx = math.sqrt(x)
    f22 = hyp2f2_half(x, ctl)
    deriv = (-rx * math.log(x) * lommel_s_half(0.0, x, ctl)
             - 0.5 * math.pi ** 1.5 * math.sin(x + 0.25 * math.pi)
             + math.sqrt(math.pi) * (EULER_GAMMA + math.log(4.0 * x)) * math.cos(x + 0.25 * math.pi)
             + 4.0 * rx * (math.sin(x) * f22.real - math.cos(x) * f22.imag))
    return -deriv


def log_weighted_sin_integral_fd(x: float, h: float = 1e-4,
                                 ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Finite-difference fallback for the logarithmic integral.

    Differentiates the exponent family numerically at exponent 1/2;
    regression anchor for the 2F2 closed form.
    """
    if x <= 0:
        raise DomainError(f"need x > 0, got {x}")
    hi = sin_exponent_transform(0.5 + h, x, 1.0, ctl)
    lo = sin_exponent_transform(0.5 - h, x, 1.0, ctl)
    return -(hi - lo) / (2.0 * h)


def si_ci_representation(n: int, m: int, x: float, zeta: float = 1.0,
                         kernel: Kernel = Kernel.SIN,
                         ctl: SeriesControl = DEFAULT_CONTROL,
                         as_printed: bool = False) -> float:
    """Exponent-2n+1/m transforms through generalized sine/cosine integrals.

    The printed sine form pairs cos(zeta x) with a bare sin(x); the
    corrected sin(zeta x) ships by default (errata LOM-SICI-PHASE).
    """
    if x <= 0:
        raise DomainError(f"need x > 0, got {x}")
    if zeta <= 0:
        raise DomainError(f"need zeta > 0, got {zeta}")
    p = GeneralExponent(n, m).exponent(False)
    u = zeta * x
    a_trig = 1.0 - p
    si = gen_si(a_trig, u, ctl)
    ci = gen_ci(a_trig, u, ctl)
    if kernel is Kernel.SIN:
        sin_arg = x if as_printed else u
        return zeta ** (p - 1.0) * (math.cos(u) * si - math.sin(sin_arg) * ci)
    return zeta ** (p - 1.0) * (math.cos(u) * ci + math.sin(u) * si)
