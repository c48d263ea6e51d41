"""Frequency response of the oscillating plate.

Sweeps omega1 = omega * tau over six decades and prints the gas velocity at
the wall, the friction force and the dissipated power, all dimensionless.
With matplotlib installed the three curves are saved to
``frequency_response.png`` next to this script.

Run:  python3 demos/frequency_response.py
"""

from pathlib import Path

import numpy as np

from stokes2 import Factorizer, critical_frequency, dissipation, friction, index_transition_frequency, wall_velocity

omega = np.geomspace(1e-4, 100.0, 61)
rows = []
for w in omega:
    F = Factorizer(w)
    W = wall_velocity(F).W
    fr = friction(F)
    rows.append((w, F.kappa, abs(W), np.angle(W), fr.A, fr.phi, dissipation(F)))
rows = np.array(rows)

print(f"omega1* (quoted critical frequency) = {critical_frequency():.7f}")
print(f"index changes at s(mu0)             = {index_transition_frequency():.7f}\n")
print(f"{'omega1':>10} {'kappa':>5} {'|W|':>9} {'arg W':>9} {'A':>9} {'phi':>9} {'power':>10}")
for r in rows[::6]:
    print(f"{r[0]:10.3e} {int(r[1]):5d} {r[2]:9.5f} {r[3]:9.5f} {r[4]:9.5f} {r[5]:9.5f} {r[6]:10.3e}")

# limits worth checking by eye:
#   omega1 -> 0   |W| -> 1, phi -> -pi/4, power ~ sqrt(omega1)/2 (viscous shear wave)
#   omega1 -> inf |W| -> 1/2, A -> const (free-molecular plate)
lo, hi = rows[0], rows[-1]
print(f"\nlow end : |W| = {lo[2]:.4f}, phi + pi/4 = {lo[5] + np.pi / 4:+.4f}, "
      f"power / (sqrt(omega1)/2) = {lo[6] / (0.5 * np.sqrt(lo[0])):.4f}")
print(f"high end: |W| = {hi[2]:.4f}, A = {hi[4]:.5f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    raise SystemExit(0)

fig, ax = plt.subplots(1, 3, figsize=(12, 3.6))
ax[0].semilogx(rows[:, 0], rows[:, 2])
ax[0].set_title("|W|, gas velocity at the wall")
ax[1].semilogx(rows[:, 0], rows[:, 4])
ax[1].set_title("friction amplitude A")
ax[2].loglog(rows[:, 0], rows[:, 6])
ax[2].set_title("mean dissipated power")
for a in ax:
    a.axvline(index_transition_frequency(), color="0.7", lw=0.8)
    a.set_xlabel("omega1")
fig.tight_layout()
out = Path(__file__).with_name("frequency_response.png")
fig.savefig(out, dpi=120)
print(f"\nsaved {out}")
