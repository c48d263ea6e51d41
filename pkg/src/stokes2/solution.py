"""Physical quantities assembled from the factorization.

Every quantity is a complex amplitude in the dimensionless normalization of
the model: velocities in units of ``U0 * v_T``, the force per unit area in
units of ``2 p U0``, and dissipated power per unit area in units of
``W0 = U0**2 p / sqrt(beta)``. The physical value at dimensionless time
``t1`` is ``Re{exp(-1j*omega1*t1) * amplitude}``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .dispersion import SQRT_PI, lambda_pv, omega_of, s_func
from .exceptions import NoDiscreteZeroError
from .factor import Factorizer

BOLTZMANN = 1.380649e-23


@dataclass(frozen=True)
class WallResponse:
    W: complex
    amplitude: float
    phase: float

    @classmethod
    def from_complex(cls, W):
        W = complex(W)
        return cls(W=W, amplitude=abs(W), phase=float(np.angle(W)))

    def at_time(self, t1, omega1):
        """``U_y(0, t1) / U0 = |W| cos(omega1 t1 - phase)``."""
        return self.amplitude * np.cos(omega1 * np.asarray(t1) - self.phase)


@dataclass(frozen=True)
class ForceResponse:
    """Friction force on the plate; ``F0 = A exp(1j*phi)`` up to a 2 pi shift."""

    F0: complex
    A: float
    phi: float


@dataclass
class Profile:
    x1: np.ndarray
    U: np.ndarray

    def at_time(self, t1, omega1):
        return np.real(np.exp(-1j * omega1 * t1) * self.U)

    @property
    def amplitude(self):
        return np.abs(self.U)


def _factorizer(F):
    return F if isinstance(F, Factorizer) else Factorizer(F)


# spectral coefficients ------------------------------------------------------

def coeff_a(eta, F):
    """Continuous-spectrum coefficient ``a(eta)`` in units of ``U0``."""
    F = _factorizer(F)
    eta = np.atleast_1d(np.asarray(eta, dtype=float))
    if np.any(eta <= 0):
        raise ValueError("coeff_a needs eta > 0")
    val = 2.0 / SQRT_PI * F.sin_q(eta) / (eta * F.X_cut(eta))
    if F.kappa == 1:
        val = val / (eta - F.eta0)
    return val


def coeff_a0(F, form="V"):
    """Discrete-mode coefficient (index 1 only).

    ``form='V'`` gives ``2 sqrt(pi) exp(-V(eta0))``; ``form='X'`` gives
    ``2 sqrt(pi) / (eta0 X(eta0))``.
    """
    F = _factorizer(F)
    if F.kappa != 1:
        raise NoDiscreteZeroError("a0 exists only when the index is 1")
    if form == "V":
        return complex(2.0 * SQRT_PI * np.exp(-F.V(F.eta0)[0]))
    if form == "X":
        return complex(2.0 * SQRT_PI / (F.eta0 * F.X(F.eta0)[0]))
    raise ValueError("form must be 'V' or 'X'")


# distribution function ------------------------------------------------------

def _delta_factor(F, mu):
    """``exp(mu**2) * sin q(mu) / sqrt(pi)`` without overflow.

    ``sin q = s * R`` with ``R -> (-1)**kappa / lam_pv`` once ``s`` underflows;
    ``exp(mu**2) * s / sqrt(pi) = mu``.
    """
    s = s_func(mu)
    lpv = lambda_pv(mu, F.omega1)
    limit = (-1.0) ** F.kappa / lpv
    ok = s > 1e-280
    R = np.array(limit, dtype=complex)
    if np.any(ok):
        R[ok] = F.sin_q(mu[ok]) / s[ok]
    return mu * R


def h_distribution(x1, mu, F):
    """``h(x1, mu) / (2 U0)``.

    Parameters
    ----------
    x1 : float
        Distance from the plate, ``x1 >= 0``.
    mu : array_like
        Dimensionless velocity component normal to the plate; ``mu = 0``
        (the discontinuity of ``h`` at the wall) is excluded.
    F : Factorizer or float

    Returns
    -------
    ndarray of complex
    """
    F = _factorizer(F)
    x1 = float(x1)
    if x1 < 0:
        raise ValueError("x1 must be non-negative")
    mu = np.atleast_1d(np.asarray(mu, dtype=float))
    if np.any(mu == 0):
        raise ValueError("h is discontinuous at mu = 0; pass mu > 0 or mu < 0")
    z0 = F.z0
    g = np.exp(-x1 * z0 / F.nodes) * F.sin_q_nodes / F.X_cut_nodes

    I_mu = F.cut_integral(g, mu.astype(complex), side="pv")
    if F.kappa == 0:
        out = I_mu
    else:
        eta0 = F.eta0
        I_eta0 = F.cut_integral(g, eta0)[0]
        # 1/((eta-eta0)(eta-mu)) = [1/(eta-mu) - 1/(eta-eta0)] / (mu-eta0)
        out = (I_mu - I_eta0) / (mu - eta0)
        out = out + np.exp(-x1 * z0 / eta0) / (F.X(eta0)[0] * (eta0 - mu))

    pos = mu > 0
    if np.any(pos):
        m = mu[pos]
        term = np.exp(-x1 * z0 / m) * lambda_pv(m, F.omega1) * _delta_factor(F, m) / (m * F.X_cut(m))
        if F.kappa == 1:
            term = term / (m - F.eta0)
        out[pos] = out[pos] + term
    return out


def verify_wall_bc(F, mu_grid=None):
    """``max |h(0, mu)/(2 U0) - 1|`` over ``mu_grid`` (default 200 points on [0.05, 4])."""
    F = _factorizer(F)
    if mu_grid is None:
        mu_grid = np.linspace(0.05, 4.0, 200)
    mu_grid = np.asarray(mu_grid, dtype=float)
    if np.any(mu_grid <= 0):
        raise ValueError("mu_grid must lie in (0, inf)")
    return float(np.max(np.abs(h_distribution(0.0, mu_grid, F) - 1.0)))


# velocity -------------------------------------------------------------

def velocity_profile(F, x1_grid) -> Profile:
    """Complex velocity amplitude ``U(x1)`` in units of ``U0``."""
    F = _factorizer(F)
    x = np.atleast_1d(np.asarray(x1_grid, dtype=float))
    if np.any(x < 0):
        raise ValueError("x1 must be non-negative")
    z0 = F.z0
    base = F.sin_q_nodes / (F.nodes * F.X_cut_nodes)
    # one column per x1
    dens = np.exp(-np.outer(z0 / F.nodes, x)) * base[:, None]
    if F.kappa == 0:
        U = z0 / np.pi * F.grid.integrate(dens)
    else:
        eta0 = F.eta0
        cut = F.cut_integral(dens, eta0)[0]
        U = z0 * (np.exp(-x * z0 / eta0) / (eta0 * F.X(eta0)[0]) + cut)
    return Profile(x1=x, U=np.asarray(U, dtype=complex))


def X0_closed(F):
    return _factorizer(F).X0_closed_form()


def wall_velocity(F) -> WallResponse:
    """Gas velocity at the plate from the closed forms.

    Index 0: ``W = z0 (sqrt(omega1+i) - sqrt(omega1)) / sqrt(omega1+i)``.
    Index 1: ``W = z0 (1 + 1/(eta0 X(0)))`` with ``X(0)**2 = i z0/(omega1 eta0**2)``
    and the root fixed by the limit of ``X`` at the origin.
    """
    F = _factorizer(F)
    z0, w = F.z0, F.omega1
    if F.kappa == 0:
        r = np.sqrt(w + 1j)
        W = z0 * (r - np.sqrt(w)) / r
    else:
        W = z0 * (1.0 + 1.0 / (F.eta0 * F.X0_closed_form()))
    return WallResponse.from_complex(W)


def wall_velocity_integral(F) -> complex:
    """Wall velocity from the profile integral at ``x1 = 0``."""
    return complex(velocity_profile(F, [0.0]).U[0])


def wall_velocity_small_omega(omega1, sign=+1):
    """Small-frequency form ``z0 + sign*(1-i) sqrt(omega1 z0 / 2)``.

    ``sign=+1`` is the printed form; the root consistent with the exact
    index-1 expression is ``sign=-1``.
    """
    w = omega_of(omega1)
    z0 = 1.0 - 1j * w
    return complex(z0 + sign * (1 - 1j) * np.sqrt(w * z0 / 2.0))


# force and dissipation ---------------------------------------------------

def friction(F) -> ForceResponse:
    """Friction force amplitude on the plate in units of ``2 p U0``."""
    F = _factorizer(F)
    w, V1 = F.omega1, F.V1
    if F.kappa == 0:
        F0 = w * 1j * V1
        A = w * abs(V1)
        phi = float(np.angle(1j * V1))
    else:
        d = F.eta0 - V1
        F0 = -w * 1j * d
        A = w * abs(d)
        phi = float(np.angle(1j * d) - np.pi)
    return ForceResponse(F0=complex(F0), A=float(A), phi=phi)


def shear_stress_from_h(F, n_mu=400, mu_max=6.0):
    """``(1/sqrt(pi)) int exp(-mu^2) mu h(0, mu)/(2 U0) d mu`` by Gauss-Legendre.

    Each half-axis gets its own rule since ``h(0, mu)`` jumps at ``mu = 0``.
    Independent cross-check of :func:`friction`.
    """
    F = _factorizer(F)
    t, wt = np.polynomial.legendre.leggauss(n_mu)
    m = 0.5 * mu_max * (t + 1.0)
    wm = 0.5 * mu_max * wt
    total = 0j
    for sgn in (1.0, -1.0):
        mu = sgn * m
        h = h_distribution(0.0, mu, F)
        total += np.sum(wm * np.exp(-mu * mu) * mu * h)
    return complex(total / SQRT_PI)


def dissipation(F) -> float:
    """Mean dissipated power per unit area in units of ``W0``."""
    F = _factorizer(F)
    w, V1 = F.omega1, F.V1
    if F.kappa == 0:
        return float(w * (1j * V1).real)
    return float(w * (1j * (V1 - F.eta0)).real)


# eigenfunctions ------------------------------------------------------------

def eigenfunction_moments(eta, f, half_width=12.0):
    """Zeroth and first Gaussian moments of the continuous-spectrum eigenfunction.

    The principal-value part is integrated with QUADPACK's Cauchy weight;
    the delta part contributes ``lam(eta) * eta**k``.
    """
    eta = float(eta)
    if eta <= 0:
        raise ValueError("eta must be positive")
    w = omega_of(f)
    R = eta + half_width
    lam_eta = complex(lambda_pv(eta, w))
    out = []
    for k in (0, 1):
        # PV int g/(mu - eta) with g = mu^k exp(-mu^2); Phi carries 1/(eta - mu)
        pv, _ = integrate.quad(
            lambda m: m**k * np.exp(-m * m), -R, R, weight="cauchy", wvar=eta,
            epsabs=1e-14, epsrel=1e-12, limit=400,
        )
        out.append(-eta / SQRT_PI * pv + lam_eta * eta**k)
    return complex(out[0]), complex(out[1])


# units ---------------------------------------------------------------------

@dataclass(frozen=True)
class DimensionalScales:
    """Conversion from the dimensionless outputs to SI units.

    Parameters are number density ``n`` (1/m^3), temperature ``T`` (K),
    molecular mass ``m`` (kg), relaxation time ``tau`` (s) and plate velocity
    amplitude ``u0`` (m/s).
    """

    n: float
    T: float
    m: float
    tau: float
    u0: float

    def __post_init__(self):
        for name in ("n", "T", "m", "tau", "u0"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")

    @property
    def pressure(self):
        return self.n * BOLTZMANN * self.T

    @property
    def beta(self):
        return self.m / (2.0 * BOLTZMANN * self.T)

    @property
    def v_T(self):
        return 1.0 / np.sqrt(self.beta)

    @property
    def U0(self):
        """Dimensionless plate amplitude ``u0 / v_T``."""
        return self.u0 / self.v_T

    @property
    def mean_free_path(self):
        return self.tau * self.v_T

    def omega(self, omega1):
        return omega1 / self.tau

    def length(self, x1):
        return np.asarray(x1) * self.mean_free_path

    def time(self, t1):
        return np.asarray(t1) * self.tau

    def velocity(self, U):
        return np.asarray(U) * self.u0

    def force(self, F0):
        return np.asarray(F0) * 2.0 * self.pressure * self.U0

    def power(self, P):
        return np.asarray(P) * self.U0**2 * self.pressure * self.v_T


def convert(n, T, m, tau, u0) -> DimensionalScales:
    return DimensionalScales(n=n, T=T, m=m, tau=tau, u0=u0)
