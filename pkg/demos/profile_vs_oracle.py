"""Velocity profile: analytical solution against two references.

The analytical profile comes from the factorization; the first reference
is a discrete-ordinates solution of the same kinetic boundary-value problem
that shares no code with it, the second is the viscous (continuum) shear
wave exp(-x sqrt(omega1) (1 - i)).

At low frequency the kinetic and continuum profiles approach each other,
except for velocity slip at the wall, which dies off like sqrt(omega1).
At omega1 of order one the continuum wave is simply wrong.

Run:  python3 demos/profile_vs_oracle.py
"""

import numpy as np

from stokes2 import Factorizer, OracleConfig, landau_profile, solve_kinetic_bvp, velocity_profile

x = np.linspace(0.0, 10.0, 101)
print(f"{'omega1':>8} {'kappa':>5} {'|U-oracle|':>11} {'|U-continuum|':>14} {'U(0)':>22}")
for w in (0.01, 0.1, 0.3, 1.0, 3.0):
    F = Factorizer(w)
    U = velocity_profile(F, x).U
    Uo = solve_kinetic_bvp(w, OracleConfig(method="gmres"), x).U
    Ul = landau_profile(w, x).U
    print(f"{w:8.3g} {F.kappa:5d} {np.max(np.abs(U - Uo)):11.2e} {np.max(np.abs(U - Ul)):14.3e} "
          f"{U[0].real:10.5f}{U[0].imag:+10.5f}i")

# how the slip shrinks
print("\nwall slip 1 - |U(0)| against sqrt(omega1/2):")
for w in (1e-2, 1e-3, 1e-4, 1e-5):
    U0 = velocity_profile(Factorizer(w), [0.0]).U[0]
    print(f"  omega1 = {w:7.0e}   1 - |U(0)| = {1 - abs(U0):.5f}   sqrt(omega1/2) = {np.sqrt(w / 2):.5f}")
