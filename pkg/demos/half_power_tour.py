"""Tour of the half-integer-power transform family.

The integrals

    S_alpha = int_0^inf sin(zeta t) / (t + x)^(alpha + 1/2) dt
    C_alpha = int_0^inf cos(zeta t) / (t + x)^(alpha + 1/2) dt

have closed forms built from the two Fresnel integrals for every
nonnegative integer alpha.  This script evaluates them, verifies the
structure that makes them work (difference equation, integration by
parts, frequency scaling), and compares against direct oscillatory
quadrature.
"""

import numpy as np

from oscint import c_alpha, s0, s_alpha
from oscint.oracle import HalfPower, IntegrandSpec, Kernel, integrate_semi_infinite

print(__doc__)

# ---------------------------------------------------------------- base case
print("=== base case: alpha = 0 ===")
for x in (0.0, 0.5, 1.0, 10.0):
    print(f"  s0(x={x:4}, zeta=1) = {s0(x, 1.0):.12f}")
print()

# ------------------------------------------------- closed form vs quadrature
print("=== closed form vs oracle, alpha = 0..5 at x=1, zeta=1 ===")
print(f"  {'alpha':>5} {'closed form':>18} {'oracle':>18} {'|diff|':>10}")
for alpha in range(6):
    closed = s_alpha(alpha, 1.0, 1.0)
    rep = integrate_semi_infinite(IntegrandSpec(HalfPower(float(alpha), 1.0), Kernel.SIN, 1.0))
    print(f"  {alpha:>5} {closed:>18.12f} {rep.value:>18.12f} {abs(closed - rep.value):>10.1e}")
print()

# --------------------------------------------------------- difference equation
print("=== difference equation: (a+1/2)(a+3/2) S_{a+2} + S_a = u^-(a+1/2) ===")
for alpha in (0, 2, 4):
    for u in (0.5, 2.0):
        lhs = (alpha + 0.5) * (alpha + 1.5) * s_alpha(alpha + 2, u, 1.0) + s_alpha(alpha, u, 1.0)
        rhs = u ** -(alpha + 0.5)
        print(f"  alpha={alpha} u={u:4}: lhs={lhs:.14f} rhs={rhs:.14f}")
print()

# ------------------------------------------------------ integration by parts
print("=== integration by parts: C_a = (a+1/2) S_(a+1) ===")
for alpha in (0, 1, 2):
    lhs = c_alpha(alpha, 1.0, 1.0)
    rhs = (alpha + 0.5) * s_alpha(alpha + 1, 1.0, 1.0)
    print(f"  alpha={alpha}: C={lhs:.14f} vs {rhs:.14f}")
print()

# ---------------------------------------------------------------- scaling law
print("=== frequency scaling: S(x, zeta) = zeta^(a-1/2) S(zeta x, 1) ===")
for zeta in (0.5, 2.0, 3.0):
    lhs = s_alpha(1, 2.0, zeta)
    rhs = zeta ** 0.5 * s_alpha(1, zeta * 2.0, 1.0)
    print(f"  zeta={zeta}: {lhs:.15f} == {rhs:.15f}")
print()

# -------------------------------------------------------------- decay profile
print("=== decay of S_0(x, 1) along x (numpy sweep) ===")
xs = np.linspace(0.5, 20.0, 8)
vals = np.array([s0(float(x), 1.0) for x in xs])
for x, v in zip(xs, vals):
    bar = "#" * int(60 * abs(v))
    print(f"  x={x:6.2f}  {v:+.6f}  {bar}")
