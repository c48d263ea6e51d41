"""Index classification, critical frequency and the discrete zero.

The coefficient of the Riemann problem is ``G(mu) = lam+(mu) / lam-(mu)``
on the half-line ``mu > 0``. Its winding over the half-line (the index) is
1 when the dispersion function has a pair of complex zeros ``+/- eta0`` and 0
otherwise.

Two frequencies are exposed:

``critical_frequency()``
    ``max_mu sqrt(s(mu)**2 - lam0(mu)**2)`` ~ 0.7328, the constant quoted for
    the model.
``index_transition_frequency()``
    ``s(mu0)`` ~ 0.6973 where ``lam0(mu0) = 0``. This is where ``lam+`` passes
    through the origin and the winding actually changes; the discrete zero
    reaches the real axis there.

Classification always uses the computed winding, never a frequency
threshold.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import integrate, optimize

from .dispersion import (
    ASYMPTOTIC_RADIUS,
    dlambda0,
    dlambda_upper_entire,
    lam,
    lambda0,
    lambda_minus,
    lambda_plus,
    lambda_upper_entire,
    omega_of,
    s_func,
)
from .exceptions import (
    BranchTrackingError,
    ConvergenceError,
    DegenerateInputError,
    NearCriticalError,
    NoDiscreteZeroError,
)

MU_MAX = 8.0
NEAR_CRITICAL_BAND = 1e-6
ETA0_RESIDUAL = 1e-12
_MAX_STEP = np.pi / 4


@dataclass(frozen=True)
class SpectrumInfo:
    kappa: int
    eta0: Optional[complex]
    omega1_star: float

    def __post_init__(self):
        if self.kappa not in (0, 1):
            raise ValueError("kappa must be 0 or 1")
        if (self.kappa == 1) != (self.eta0 is not None):
            raise ValueError("eta0 must be present exactly when kappa == 1")


def critical_objective(mu):
    """``s(mu)**2 - lam0(mu)**2``; its square root is real where it is >= 0."""
    mu = np.asarray(mu, dtype=float)
    return s_func(mu) ** 2 - lambda0(mu) ** 2


@functools.lru_cache(maxsize=None)
def critical_frequency() -> float:
    """``max_{mu > 0} sqrt(s(mu)**2 - lam0(mu)**2)``.

    The feasible set is located by a sign scan with spacing 1e-4 on
    ``(0, 6]``, then the maximum is refined by golden-section search.
    """
    mu = np.arange(1e-4, 6.0 + 1e-12, 1e-4)
    obj = critical_objective(mu)
    feasible = obj >= 0.0
    if not np.any(feasible):
        raise RuntimeError("empty feasible set for the critical frequency")
    k = int(np.argmax(np.where(feasible, obj, -np.inf)))
    lo, hi = mu[max(k - 1, 0)], mu[min(k + 1, mu.size - 1)]
    res = optimize.minimize_scalar(
        lambda m: -critical_objective(m), bracket=(lo, mu[k], hi), method="golden",
        tol=1e-12,
    )
    return float(np.sqrt(-res.fun))


@functools.lru_cache(maxsize=None)
def mu0() -> float:
    """Positive real zero of ``lam0`` (about 0.924)."""
    return float(optimize.brentq(lambda m: lambda0(m), 0.5, 1.5, xtol=1e-15))


@functools.lru_cache(maxsize=None)
def index_transition_frequency() -> float:
    """Frequency ``s(mu0)`` at which the winding of ``G`` changes."""
    return float(s_func(mu0()))


def ensure_regular(f):
    """Reject frequencies inside the guard band of either critical value."""
    w = omega_of(f)
    for name, wc in (
        ("critical frequency", critical_frequency()),
        ("index transition frequency", index_transition_frequency()),
    ):
        if abs(w - wc) < NEAR_CRITICAL_BAND:
            raise NearCriticalError(
                f"omega1={w!r} is within {NEAR_CRITICAL_BAND:g} of the {name} {wc:.10f}; "
                "the Riemann problem is degenerate there"
            )


def coefficient_G(mu, f):
    """``G(mu) = lam+(mu) / lam-(mu)`` for ``mu > 0``."""
    mu = np.asarray(mu, dtype=float)
    if np.any(mu <= 0):
        raise ValueError("coefficient_G is defined for mu > 0")
    lp = lambda_plus(mu, f)
    lm = lambda_minus(mu, f)
    if np.any(np.abs(lm) < 1e-14) or np.any(np.abs(lp) < 1e-14):
        raise DegenerateInputError("boundary value of lam vanishes; G is degenerate")
    return lp / lm


def log_G_principal(mu, f):
    """Principal ``log G`` computed without cancellation for small ``s``.

    ``|lam+|^2 - |lam-|^2 = -4 s omega1`` and
    ``lam+ * conj(lam-) = lam0^2 + omega1^2 - s^2 + 2j*lam0*s``.
    """
    w = omega_of(f)
    mu = np.asarray(mu, dtype=float)
    l0 = lambda0(mu)
    s = s_func(mu)
    lm2 = l0 * l0 + (s + w) ** 2
    re = 0.5 * np.log1p(-4.0 * s * w / lm2)
    im = np.arctan2(2.0 * l0 * s, l0 * l0 + w * w - s * s)
    return re + 1j * im


class BranchTable:
    """Dense table of the continuous branch of ``arg G`` on ``(0, mu_max]``.

    The grid is refined until consecutive increments are below pi/4, which
    makes the branch correction at an arbitrary point unambiguous.
    """

    def __init__(self, f, mu_max=MU_MAX, n_base=4000, max_passes=60):
        self.omega1 = omega_of(f)
        mu = np.unique(np.concatenate([
            np.geomspace(1e-10, 1e-2, 80),
            np.linspace(1e-2, mu_max, n_base),
        ]))
        for _ in range(max_passes):
            arg = np.angle(np.exp(1j * log_G_principal(mu, self.omega1).imag))
            step = np.angle(np.exp(1j * np.diff(arg)))
            bad = np.abs(step) >= _MAX_STEP
            if not np.any(bad):
                break
            mids = 0.5 * (mu[:-1][bad] + mu[1:][bad])
            if np.any(mids <= mu[:-1][bad]) or np.any(mids >= mu[1:][bad]):
                break
            mu = np.sort(np.concatenate([mu, mids]))
        else:
            bad = np.ones(1, dtype=bool)
        if np.any(bad):
            raise BranchTrackingError(
                f"branch of arg G not resolvable at omega1={self.omega1!r}"
            )
        self.mu = mu
        self.arg = arg[0] + np.concatenate([[0.0], np.cumsum(step)])
        self.winding = int(np.rint((self.arg[-1] - self.arg[0]) / (2 * np.pi)))

    def continuous_arg(self, mu):
        mu = np.asarray(mu, dtype=float)
        principal = log_G_principal(mu, self.omega1).imag
        ref = np.interp(mu, self.mu, self.arg)
        # beyond the table the branch is constant (G -> 1)
        ref = np.where(mu > self.mu[-1], self.arg[-1], ref)
        return principal + 2 * np.pi * np.rint((ref - principal) / (2 * np.pi))

    def log_G(self, mu):
        mu = np.asarray(mu, dtype=float)
        return log_G_principal(mu, self.omega1).real + 1j * self.continuous_arg(mu)


def theta_branch(f, grid):
    """Half the continuous argument of ``G`` on ``grid`` and the winding.

    Returns
    -------
    theta : ndarray
        ``arg G / 2`` with ``theta(0+) = 0``.
    winding : int
        Total increment of ``arg G`` over the half-line divided by ``2 pi``.
    """
    grid = np.asarray(grid, dtype=float)
    if np.any(grid <= 0) or np.any(np.diff(grid) <= 0):
        raise ValueError("grid must be increasing and positive")
    table = BranchTable(f, mu_max=max(MU_MAX, float(grid[-1])))
    theta = 0.5 * table.continuous_arg(grid)
    if table.winding not in (0, 1):
        raise BranchTrackingError(f"unexpected winding {table.winding}")
    return theta, table.winding


def _newton(fun, dfun, z, maxiter=100, tol=1e-13):
    for it in range(maxiter):
        step = fun(z) / dfun(z)
        z = z - step
        if abs(step) <= tol * max(1.0, abs(z)):
            # one polishing step once in the quadratic regime
            return z - fun(z) / dfun(z), it + 1
    raise ConvergenceError("Newton iteration for eta0 did not converge", residual=abs(fun(z)))


def _upper_branch(z, w):
    # far out in the upper half-plane the Faddeeva form cancels; the
    # asymptotic series has no exponentially small term there
    if abs(z) >= ASYMPTOTIC_RADIUS and z.imag > 0:
        return lam(z, w)
    return lambda_upper_entire(z, w)


def _upper_branch_derivative(z):
    if abs(z) >= ASYMPTOTIC_RADIUS and z.imag > 0:
        return dlambda0(z)
    return dlambda_upper_entire(z)


def find_eta0(f, kappa=None, maxiter=100):
    """Discrete zero of ``lam`` with ``Re(z0/eta0) > 0``.

    Newton's method on the entire continuation of the upper-half-plane branch,
    seeded by ``(1+i)/(2 sqrt(omega1))`` and continued geometrically in
    ``omega1`` from ``min(omega1, 1e-2)``.
    """
    w = omega_of(f)
    if w <= 0:
        raise ValueError("omega1 must be positive")
    if kappa is None:
        kappa = BranchTable(w).winding
    if kappa == 0:
        raise NoDiscreteZeroError(f"lam has no complex zeros for omega1={w!r} (index 0)")
    w_start = min(w, 1e-2)
    z = (1 + 1j) / (2 * np.sqrt(w_start))
    for wk in np.geomspace(w_start, w, 40 if w > w_start else 1):
        z, _ = _newton(
            lambda t: complex(_upper_branch(t, wk)),
            lambda t: complex(_upper_branch_derivative(t)),
            z,
            maxiter=maxiter,
        )
    if z.imag <= 0:
        raise NoDiscreteZeroError(
            f"continuation left the upper half-plane at omega1={w!r}; no genuine zero"
        )
    z0 = complex(1.0, -w)
    if (z0 / z).real < 0:
        z = -z
    res = abs(complex(lam(z, w)))
    if res >= ETA0_RESIDUAL:
        raise ConvergenceError(f"|lam(eta0)| = {res:.3e} above tolerance", residual=res)
    return complex(z)


def classify(f) -> SpectrumInfo:
    """Index and discrete zero for a frequency outside the guard bands."""
    ensure_regular(f)
    table = BranchTable(f)
    eta0 = find_eta0(f, kappa=table.winding) if table.winding == 1 else None
    return SpectrumInfo(kappa=table.winding, eta0=eta0, omega1_star=critical_frequency())


def argument_principle_count(f, radius=None, offset=1e-6, npts=20000):
    """``(1/2 pi i) \\oint lam'/lam dz`` over rectangles above and below the axis.

    Each rectangle has corners ``(-R, +/-offset)`` and ``(R, +/-R)``; the
    trapezoid rule is applied edge by edge. Returns the raw (real) count,
    which should be close to ``2 * kappa``.
    """
    w = omega_of(f)
    if radius is None:
        radius = max(10.0, 4.0 / np.sqrt(2.0 * w))
    R = float(radius)

    def edge(a, b):
        t = np.linspace(0.0, 1.0, npts)
        z = a + (b - a) * t
        g = dlambda0(z) / lam(z, w) * (b - a)
        return integrate.trapezoid(g, t)

    total = 0.0
    for sgn in (1.0, -1.0):
        c = [complex(-R, sgn * offset), complex(R, sgn * offset),
             complex(R, sgn * R), complex(-R, sgn * R)]
        if sgn < 0:
            c = c[::-1]
        loop = sum(edge(c[i], c[(i + 1) % 4]) for i in range(4))
        total += loop / (2j * np.pi)
    return float(np.real(total))
