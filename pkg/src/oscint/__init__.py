"""oscint: Fourier sine/cosine transforms of irrational integrands.

Closed-form evaluators for four families of semi-infinite oscillatory
integrals -- inverse half-integer powers, two-radical weights,
radical-pole weights, and general real exponents via Lommel functions --
each cross-validated against an independent lobe-quadrature oracle.

Every result is pure double precision; all functions are pure,
reentrant and thread-safe (no global mutable state).
"""

from .control import DEFAULT_CONTROL, SeriesControl, control_from_env
from .errata import ERRATA, Erratum
from .errors import (
    AccelerationStalledError,
    ConvergenceError,
    DivergentIntegralError,
    DomainError,
    MaxSubdivisionsError,
    PoleError,
    UnsupportedError,
)
from .half_power import (
    FamilyCoefficients,
    HalfPowerParams,
    PhasePattern,
    c0,
    c_alpha,
    family_coefficients,
    fresnel_bracket,
    s0,
    s_alpha,
)
from .lommel import (
    GeneralExponent,
    LommelOrder,
    cos_exponent_transform,
    general_cos_transform,
    general_sin_transform,
    log_weighted_sin_integral,
    log_weighted_sin_integral_fd,
    lommel_s_half,
    pre_reduction_values,
    si_ci_representation,
    sin_exponent_transform,
)
from .oracle import (
    HalfPower,
    IntegrandSpec,
    Kernel,
    LogHalfPower,
    QuadraticPhase,
    QuadratureReport,
    RadicalPole,
    ThreeRadical,
    TwoRadical,
    integrate_finite,
    integrate_semi_infinite,
    kernel_breakpoints,
    lobe_sum,
    oscillatory_integral,
)
from .radical_pole import (
    RadicalPoleParams,
    approx_pole_cos_transform,
    approx_pole_sin_transform,
    pole_cos_transform,
    pole_head_cos_approx,
    pole_head_cos_series,
    pole_head_sin_approx,
    pole_head_sin_series,
    pole_sin_transform,
    pole_tail_cos,
    pole_tail_sin,
)
from .special_functions import (
    EULER_GAMMA,
    bessel_j0,
    bessel_y0,
    fresnel_c,
    fresnel_s,
    gamma_real,
    gen_ci,
    gen_si,
    hyp2f1,
    hyp2f2_half,
    upper_incomplete_gamma,
)
from .two_radical import (
    TwoRadicalParams,
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

__version__ = "0.1.0"
