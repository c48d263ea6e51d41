"""Canonical factorization of the homogeneous Riemann problem on (0, inf).

``X+(mu) = G(mu) X-(mu)`` is solved by

    X(z) = exp V(z)          (index 0)
    X(z) = exp V(z) / z      (index 1)

with ``V(z) = 1/(2 pi i) int_0^inf ell(t)/(t - z) dt`` and the density
``ell = log G`` taken on its continuous branch, shifted by ``-2 pi i`` for
index 1 so that it vanishes at infinity. The density decays like
``exp(-t**2)`` and is truncated at ``mu_max``.

On the cut the factorizing function is given the meaning
``X(mu) = sqrt(X+(mu) X-(mu))``, i.e. the principal-value exponential.
"""

from __future__ import annotations

import numpy as np

from .dispersion import Freq, lam
from .quadrature import PanelGrid, graded_breaks
from .spectrum import BranchTable, MU_MAX, critical_frequency, ensure_regular, find_eta0

TWO_PI_I = 2j * np.pi
_CHUNK = 384


class Factorizer:
    """Factorizing function ``X`` for one frequency.

    Parameters
    ----------
    f : Freq or float
        Dimensionless frequency; must lie outside the near-critical bands.
    mu_max : float
        Truncation of the density support.
    tol : float
        Relative size of the trailing Legendre coefficients of the density
        accepted on each panel.
    max_panels : int
        Upper bound on adaptive panel bisection.
    """

    def __init__(self, f, mu_max=MU_MAX, tol=1e-13, max_panels=400):
        self.freq = f if isinstance(f, Freq) else Freq(f)
        ensure_regular(self.freq)
        self.omega1 = self.freq.omega1
        self.z0 = self.freq.z0
        self.mu_max = float(mu_max)
        self.branch = BranchTable(self.omega1, mu_max=self.mu_max)
        self.kappa = self.branch.winding
        if self.kappa not in (0, 1):
            raise RuntimeError(f"unexpected index {self.kappa}")
        self.eta0 = find_eta0(self.omega1, kappa=1) if self.kappa == 1 else None
        self.omega1_star = critical_frequency()

        breaks = graded_breaks(self.mu_max)
        for _ in range(40):
            grid = PanelGrid(breaks)
            ell = self.density(grid.nodes)
            tail = grid.legendre_tail(ell)
            bad = tail > tol * max(1.0, np.max(np.abs(ell)))
            if not np.any(bad) or grid.npanels >= max_panels:
                break
            mids = grid.centers[bad]
            breaks = np.sort(np.concatenate([breaks, mids]))
        self.grid = grid
        self.ell = ell
        self.nodes = grid.nodes
        self.V1 = complex(-grid.integrate(ell) / TWO_PI_I)
        self.V_pv_nodes = self._cauchy(ell, self.nodes, "pv") / TWO_PI_I
        self.X_cut_nodes = np.exp(self.V_pv_nodes)
        if self.kappa == 1:
            self.X_cut_nodes = self.X_cut_nodes / self.nodes
        self.sin_q_nodes = _sin_q(ell)

    # density -----------------------------------------------------------

    def density(self, mu):
        """Index-adjusted ``log G`` on the continuous branch."""
        return self.branch.log_G(mu) - TWO_PI_I * self.kappa

    @property
    def theta_table(self):
        """Nodes and ``Theta = ell / 2`` (complex) on the quadrature grid."""
        return self.nodes, 0.5 * self.ell

    def sin_q(self, mu):
        return _sin_q(self.density(mu))

    def cos_q(self, mu):
        return np.cosh(0.5 * self.density(mu))

    # Cauchy integrals ------------------------------------------------------

    def _cauchy(self, values, z, side=None):
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        values = np.asarray(values)
        out = np.empty((z.size,) + values.shape[1:], dtype=complex)
        for i in range(0, z.size, _CHUNK):
            out[i:i + _CHUNK] = self.grid.cauchy_matrix(z[i:i + _CHUNK], side) @ values
        return out

    def cut_integral(self, values, z, side=None):
        """``(1/pi) int_0^inf g(eta)/(eta - z) d eta`` for ``g`` given at the nodes."""
        return self._cauchy(values, z, side) / np.pi

    def _check_off_cut(self, z):
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        if np.any((z.imag == 0) & (z.real >= 0)):
            raise ValueError("z lies on the cut [0, inf); use the boundary-value methods")
        return z

    # V and X -----------------------------------------------------------

    def V(self, z):
        """Cauchy integral of the density for ``z`` off ``[0, inf)``."""
        z = self._check_off_cut(z)
        return self._cauchy(self.ell, z) / TWO_PI_I

    def X(self, z):
        """Factorizing function off the cut. ``z = 0`` returns the limit."""
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        zero = z == 0
        out = np.empty(z.shape, dtype=complex)
        if np.any(zero):
            out[zero] = self.X0()
        if np.any(~zero):
            zz = z[~zero]
            val = np.exp(self.V(zz))
            out[~zero] = val / zz if self.kappa == 1 else val
        return out

    def X0(self):
        """``X(0)`` as the limit of ``X(z)`` for ``z -> 0`` off the cut.

        Index 0: ``exp((1/2 pi i) int ell(t)/t dt)``. Index 1: with
        ``ell(0) = -2 pi i`` split off, ``-exp((1/2 pi i) int (ell+2 pi i)/t dt) / mu_max``.
        """
        if self.kappa == 0:
            return complex(np.exp(self.grid.integrate(self.ell / self.nodes) / TWO_PI_I))
        reg = self.grid.integrate((self.ell + TWO_PI_I) / self.nodes) / TWO_PI_I
        return complex(-np.exp(reg) / self.mu_max)

    def V_pv(self, mu):
        mu = np.atleast_1d(np.asarray(mu, dtype=float))
        if np.any(mu <= 0):
            raise ValueError("boundary values need mu > 0")
        return self._cauchy(self.ell, mu, "pv") / TWO_PI_I

    def V_boundary(self, mu, side):
        mu = np.atleast_1d(np.asarray(mu, dtype=float))
        sign = {"+": 0.5, "-": -0.5}[side]
        return self.V_pv(mu) + sign * self.density(mu)

    def _from_V(self, V, mu):
        val = np.exp(V)
        return val / mu if self.kappa == 1 else val

    def X_plus(self, mu):
        mu = np.atleast_1d(np.asarray(mu, dtype=float))
        return self._from_V(self.V_boundary(mu, "+"), mu)

    def X_minus(self, mu):
        mu = np.atleast_1d(np.asarray(mu, dtype=float))
        return self._from_V(self.V_boundary(mu, "-"), mu)

    def X_cut(self, mu):
        """Principal-value meaning of ``X`` on the cut, ``sqrt(X+ X-)``."""
        mu = np.atleast_1d(np.asarray(mu, dtype=float))
        return self._from_V(self.V_pv(mu), mu)

    # identities ----------------------------------------------------------

    def factorization_rhs(self, z):
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        xx = self.X(z) * self.X(-z)
        if self.kappa == 0:
            return -1j * self.omega1 * xx
        return 1j * self.omega1 * (z * z - self.eta0**2) * xx

    def check_factorization(self, z):
        """Relative residual of ``lam(z) = lam_inf X(z) X(-z)`` (index 0) or
        ``lam(z) = i omega1 (z^2 - eta0^2) X(z) X(-z)`` (index 1)."""
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        if np.any(z.imag == 0):
            raise ValueError("check_factorization needs z off the real axis")
        lhs = lam(z, self.omega1)
        return np.abs(lhs - self.factorization_rhs(z)) / np.abs(lhs)

    def representation_lhs(self, z):
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        inv = 1.0 / self.X(z)
        if self.kappa == 0:
            return inv - 1.0
        return inv - z + self.V1

    def representation_rhs(self, z):
        """``-(1/pi) int sin q(eta) / (X(eta) (eta - z)) d eta``."""
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        g = self.sin_q_nodes / self.X_cut_nodes
        out = np.empty(z.shape, dtype=complex)
        zero = z == 0
        if np.any(zero):
            out[zero] = -self.grid.integrate(g / self.nodes) / np.pi
        if np.any(~zero):
            zz = self._check_off_cut(z[~zero])
            out[~zero] = -self.cut_integral(g, zz)
        return out

    def representation_residual(self, z):
        """Residual of the integral representation of ``1/X``."""
        return np.abs(self.representation_lhs(z) - self.representation_rhs(z))

    def X0_closed_form(self):
        """Closed forms of ``X(0)`` from the factorization at ``z = 0``.

        The square root is resolved to the branch of the computed
        cut-limit value (see :meth:`X0`).
        """
        if self.kappa == 0:
            sq = (1.0 + 1j / self.omega1) + 0j
        else:
            sq = 1j * self.z0 / (self.omega1 * self.eta0**2)
        root = np.sqrt(sq)
        return complex(root if (root * np.conj(self.X0())).real >= 0 else -root)


def _sin_q(ell):
    # q = -i ell / 2  =>  sin q = -i sinh(ell / 2); sinh keeps tiny densities exact
    return -1j * np.sinh(0.5 * ell)


def build_factorizer(omega1, **kwargs) -> Factorizer:
    return Factorizer(omega1, **kwargs)
