"""Independent reference solutions for the velocity profile.

``solve_kinetic_bvp`` treats the kinetic boundary-value problem

    mu dh/dx + z0 h = 2 U(x),    U(x) = 1/(2 sqrt(pi)) int exp(-mu^2) h dmu,
    h(0, mu > 0) = 2,            h(L, mu < 0) = 0,

by discrete ordinates and source iteration, without using any of the
analytical machinery. Along each characteristic the transport equation is
integrated exactly for a source that is linear on each cell.

``landau_profile`` is the continuum (Navier-Stokes) limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import interpolate, signal
from scipy.sparse import linalg as sparse_linalg

from .dispersion import SQRT_PI, omega_of
from .exceptions import ConvergenceError
from .solution import Profile
from .spectrum import find_eta0, BranchTable


@dataclass(frozen=True)
class OracleConfig:
    """Discretization of the discrete-ordinates solver.

    ``L=None`` picks ``max(30, 10 |eta0|)`` when a discrete mode exists and 30
    otherwise. ``quadrature`` is ``'legendre'`` (composite Gauss-Legendre on
    each half-axis over ``(0, mu_cut]``, panels graded toward 0) or
    ``'hermite'`` (full-range Gauss-Hermite with ``Nmu`` nodes per half-axis
    and ``|mu| < 1e-3`` removed).

    ``method='source'`` is plain source iteration. Its contraction factor
    tends to 1 as ``omega1 -> 0``; ``method='gmres'`` solves the same fixed
    point ``U = K U + b`` with GMRES, which needs far fewer sweeps there.
    """

    L: Optional[float] = None
    Nx: int = 4000
    Nmu: int = 48
    tol: float = 1e-10
    max_iters: int = 20000
    quadrature: str = "legendre"
    mu_cut: float = 6.0
    method: str = "source"

    def __post_init__(self):
        if self.L is not None and not self.L > 10:
            raise ValueError("L must exceed 10 mean free paths")
        if self.Nx < 200:
            raise ValueError("Nx must be at least 200")
        if self.Nmu < 24:
            raise ValueError("Nmu must be at least 24")
        if not 0 < self.tol <= 1e-8:
            raise ValueError("tol must lie in (0, 1e-8]")
        if self.max_iters < 1:
            raise ValueError("max_iters must be positive")
        if self.quadrature not in ("legendre", "hermite"):
            raise ValueError("quadrature must be 'legendre' or 'hermite'")
        if self.method not in ("source", "gmres"):
            raise ValueError("method must be 'source' or 'gmres'")


@dataclass
class OracleResult:
    profile: Profile
    x: np.ndarray
    U: np.ndarray
    iterations: int
    residual: float
    shear_stress: complex
    L: float


# panel breaks on (0, 1], scaled by mu_cut; graded toward mu = 0 where
# exp(-x z0 / mu) varies fastest
_MU_BREAKS = np.array([0.0, 0.01, 0.04, 0.12, 0.3, 0.7, 1.5, 3.0, 6.0]) / 6.0


def velocity_nodes(cfg: OracleConfig):
    """Positive nodes ``mu`` and weights ``w`` such that
    ``int exp(-mu^2) g(mu) dmu ~ sum w g(mu)`` on each half-axis."""
    if cfg.quadrature == "legendre":
        breaks = _MU_BREAKS * cfg.mu_cut
        n = -(-cfg.Nmu // (breaks.size - 1))
        t, wt = np.polynomial.legendre.leggauss(n)
        lo, hi = breaks[:-1, None], breaks[1:, None]
        mu = (0.5 * (hi - lo) * (t + 1.0) + lo).ravel()
        w = (0.5 * (hi - lo) * wt).ravel() * np.exp(-mu * mu)
        return mu, w
    x, wx = np.polynomial.hermite.hermgauss(2 * cfg.Nmu)
    keep = x > 1e-3
    mu, w = x[keep], wx[keep]
    # removed weight goes back proportionally, so the half-range mass stays sqrt(pi)/2
    w = w * (0.5 * SQRT_PI) / w.sum()
    return mu, w


def _cell_coefficients(z0, mu, dx):
    kd = z0 * dx / mu
    a = np.exp(-kd)
    one_minus_a = -np.expm1(-kd)
    small = np.abs(kd) < 1e-3
    # 1 - (1 - a)/kd, with its Taylor series for small kd
    phi = np.where(small, kd / 2 - kd**2 / 6 + kd**3 / 24, 1.0 - one_minus_a / np.where(small, 1.0, kd))
    c1 = phi / z0
    c0 = one_minus_a / z0 - c1
    return a, c0, c1


def _sweep(S, h0, a, c0, c1):
    """``h[n] = a h[n-1] + c0 S[n-1] + c1 S[n]`` with ``h[0] = h0``."""
    forcing = c0 * S[:-1] + c1 * S[1:]
    h = np.empty_like(S)
    h[0] = h0
    h[1:], _ = signal.lfilter([1.0], [1.0, -a], forcing, zi=np.array([a * h0]))
    return h


def solve_kinetic_bvp(f, cfg: Optional[OracleConfig] = None, x1_grid=None, return_result=False):
    """Velocity profile from the discrete-ordinates solver.

    Returns a :class:`Profile` on ``x1_grid`` (default: the solver grid), or
    the full :class:`OracleResult` with ``return_result=True``.
    """
    cfg = cfg or OracleConfig()
    w1 = omega_of(f)
    if w1 <= 0:
        raise ValueError("omega1 must be positive")
    z0 = complex(1.0, -w1)
    L = cfg.L
    if L is None:
        L = 30.0
        if BranchTable(w1).winding == 1:
            L = max(30.0, 10.0 * abs(find_eta0(w1, kappa=1)))
    x = np.linspace(0.0, L, cfg.Nx)
    dx = x[1] - x[0]
    mu, w = velocity_nodes(cfg)
    coeffs = [_cell_coefficients(z0, m, dx) for m in mu]
    norm = 1.0 / (2.0 * SQRT_PI)

    def transport(U, wall):
        """One sweep: velocity from the source 2U, plus outgoing wall values."""
        S = 2.0 * U
        S_rev = S[::-1]
        U_new = np.zeros_like(U)
        h_out = np.zeros(mu.size, dtype=complex)
        for j, (a, c0, c1) in enumerate(coeffs):
            h_fwd = _sweep(S, wall, a, c0, c1)
            h_bwd = _sweep(S_rev, 0j, a, c0, c1)[::-1]
            U_new += w[j] * (h_fwd + h_bwd)
            h_out[j] = h_bwd[0]
        return U_new * norm, h_out

    U = np.zeros(cfg.Nx, dtype=complex)
    if cfg.method == "source":
        for it in range(1, cfg.max_iters + 1):
            U_new, h_wall_out = transport(U, 2.0 + 0j)
            res = float(np.max(np.abs(U_new - U)))
            U = U_new
            if res < cfg.tol:
                break
        else:
            raise ConvergenceError(
                f"source iteration stopped after {cfg.max_iters} sweeps; "
                f"residual {res:.3e}. Increase L, Nx or max_iters",
                residual=res,
            )
    else:
        b, _ = transport(U, 2.0 + 0j)
        op = sparse_linalg.LinearOperator(
            (cfg.Nx, cfg.Nx), dtype=complex,
            matvec=lambda v: v - transport(np.asarray(v).ravel(), 0j)[0],
        )
        count = [0]
        U, info = sparse_linalg.gmres(
            op, b, rtol=cfg.tol, atol=0.0, restart=200, maxiter=cfg.max_iters,
            callback=lambda _: count.__setitem__(0, count[0] + 1), callback_type="pr_norm",
        )
        U_new, h_wall_out = transport(U, 2.0 + 0j)
        res = float(np.max(np.abs(U_new - U)))
        it = count[0]
        if info != 0 or res > 100 * cfg.tol:
            raise ConvergenceError(f"GMRES did not converge; residual {res:.3e}", residual=res)
        U = U_new

    # wall shear stress in units of 2 p U0; incoming h(0, mu>0) = 2
    stress = (np.sum(w * mu * 2.0) - np.sum(w * mu * h_wall_out)) / (2.0 * SQRT_PI)
    if x1_grid is None:
        prof = Profile(x1=x, U=U)
    else:
        xq = np.asarray(x1_grid, dtype=float)
        if np.any(xq < 0) or np.any(xq > L):
            raise ValueError(f"x1_grid must lie in [0, {L}]")
        spl_r = interpolate.CubicSpline(x, U.real)
        spl_i = interpolate.CubicSpline(x, U.imag)
        prof = Profile(x1=xq, U=spl_r(xq) + 1j * spl_i(xq))
    if return_result:
        return OracleResult(prof, x, U, it, res, complex(stress), L)
    return prof


def landau_profile(f, x1_grid) -> Profile:
    """Continuum limit ``U = exp(-x1 sqrt(omega1) (1 - i))``."""
    w1 = omega_of(f)
    x = np.atleast_1d(np.asarray(x1_grid, dtype=float))
    return Profile(x1=x, U=np.exp(-x * np.sqrt(w1) * (1 - 1j)))
