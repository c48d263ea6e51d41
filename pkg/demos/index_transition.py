"""Where the index of the Riemann problem changes.

Below a transition frequency the dispersion function has a pair of zeros
+-eta0 off the real axis, giving a discrete (hydrodynamic) mode. The zero
approaches the real axis at mu0, the positive root of lambda0, and the
winding of G drops from 1 to 0 at omega1 = s(mu0) = 0.6973.

A second characteristic frequency, omega1* = max sqrt(s^2 - lambda0^2)
= 0.7328, is often quoted as the boundary. Between the two values there is
no discrete zero; the table shows it.

Run:  python3 demos/index_transition.py
"""

from stokes2 import (
    Factorizer,
    NoDiscreteZeroError,
    critical_frequency,
    dissipation,
    find_eta0,
    friction,
    index_transition_frequency,
    mu0,
    wall_velocity,
)
from stokes2.spectrum import BranchTable, argument_principle_count

wt, ws = index_transition_frequency(), critical_frequency()
print(f"mu0 = {mu0():.8f}   s(mu0) = {wt:.7f}   omega1* = {ws:.7f}\n")
print(f"{'omega1':>9} {'winding':>7} {'contour':>8}   eta0")
for w in (0.3, 0.6, 0.69, 0.696, 0.699, 0.71, 0.73, 0.74, 1.0):
    wind = BranchTable(w).winding
    count = argument_principle_count(w) / 2
    try:
        eta = find_eta0(w, kappa=1)
        text = f"{eta.real:.6f} {eta.imag:+.6f}i"
    except NoDiscreteZeroError:
        text = "none"
    print(f"{w:9.4f} {wind:7d} {abs(count) if abs(count) < 5e-4 else count:8.3f}   {text}")

# quantities stay continuous where the index really changes
print("\nacross s(mu0):")
for w in (wt - 1e-3, wt + 1e-3):
    F = Factorizer(w)
    print(f"  omega1 = {w:.7f} kappa = {F.kappa}  |W| = {abs(wall_velocity(F).W):.5f}  "
          f"A = {friction(F).A:.5f}  power = {dissipation(F):.5f}")
