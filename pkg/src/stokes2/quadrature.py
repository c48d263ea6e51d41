"""Composite Gauss-Legendre panels with close evaluation of Cauchy integrals.

Integrals of the form ``int_a^b f(t) / (t - z) dt`` are needed for ``z`` far
from the interval, close to it, and on it (one-sided limits and principal
value). Far from a panel plain Gauss-Legendre is used; close to a panel the
density is interpolated by a polynomial on the panel's nodes and the Cauchy
transform of each monomial is obtained from the recurrence

    p_0 = log(1 - w) - log(-1 - w),   p_k = w p_{k-1} + (1 - (-1)^k) / k

(Helsing & Ojala, J. Comput. Phys. 227, 2008).
"""

from __future__ import annotations

import numpy as np

ORDER = 16
_REF_NODES, _REF_WEIGHTS = np.polynomial.legendre.leggauss(ORDER)
# rows: monomial powers; solves V^T lam = p as lam = p @ inv(V)
_VANDER_INV = np.linalg.inv(np.vander(_REF_NODES, ORDER, increasing=True))
_ODD = np.array([(1.0 - (-1.0) ** k) / k if k else 0.0 for k in range(ORDER)])

# Bernstein-ellipse parameter below which a panel counts as "close"
_RHO_NEAR = 3.0
_ENDPOINT_EPS = 1e-13


def _bernstein_rho(w):
    r = np.sqrt(w - 1.0 + 0j) * np.sqrt(w + 1.0 + 0j)
    return np.maximum(np.abs(w + r), np.abs(w - r))


def _monomial_cauchy(w, side):
    """``int_{-1}^{1} t^k/(t - w) dt`` for k < ORDER; shape (len(w), ORDER)."""
    w = np.asarray(w, dtype=complex)
    p = np.empty((w.size, ORDER), dtype=complex)
    p0 = np.log(1.0 - w) - np.log(-1.0 - w)
    if side is not None:
        on = (np.abs(w.imag) == 0.0) & (np.abs(w.real) < 1.0)
        if np.any(on):
            x = w.real[on]
            jump = {"+": 1j * np.pi, "-": -1j * np.pi, "pv": 0.0}[side]
            p0[on] = np.log((1.0 - x) / (1.0 + x)) + jump
    p[:, 0] = p0
    for k in range(1, ORDER):
        p[:, k] = w * p[:, k - 1] + _ODD[k]
    return p


class PanelGrid:
    """Composite Gauss-Legendre rule on a set of breakpoints.

    Parameters
    ----------
    breaks : array_like
        Increasing panel endpoints.
    """

    def __init__(self, breaks):
        breaks = np.asarray(breaks, dtype=float)
        if breaks.ndim != 1 or breaks.size < 2 or np.any(np.diff(breaks) <= 0):
            raise ValueError("breaks must be strictly increasing with at least two entries")
        self.breaks = breaks
        self.centers = 0.5 * (breaks[1:] + breaks[:-1])
        self.halfwidths = 0.5 * (breaks[1:] - breaks[:-1])
        self.npanels = breaks.size - 1
        self.nodes = (self.centers[:, None] + self.halfwidths[:, None] * _REF_NODES).ravel()
        self.weights = (self.halfwidths[:, None] * _REF_WEIGHTS).ravel()

    @property
    def a(self):
        return self.breaks[0]

    @property
    def b(self):
        return self.breaks[-1]

    def integrate(self, values):
        return np.tensordot(self.weights, values, axes=(0, 0))

    def legendre_tail(self, values):
        """Size of the two highest Legendre coefficients on each panel,
        relative to the panel's largest value."""
        v = np.asarray(values).reshape(self.npanels, ORDER)
        coeffs = np.polynomial.legendre.legfit(_REF_NODES, v.T, ORDER - 1)
        tail = np.abs(coeffs[-1]) + np.abs(coeffs[-2])
        return tail

    def cauchy_matrix(self, z, side=None):
        """Matrix ``K`` with ``(K @ f)[m] = int f(t)/(t - z[m]) dt``.

        ``side`` selects the meaning for real ``z`` inside ``(a, b)``: ``'+'``
        (limit from above), ``'-'`` (from below) or ``'pv'``. Points off the
        interval ignore it.
        """
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        if side not in (None, "+", "-", "pv"):
            raise ValueError("side must be None, '+', '-' or 'pv'")
        on_cut = (z.imag == 0.0) & (z.real >= self.a) & (z.real <= self.b)
        if side is None and np.any(on_cut):
            raise ValueError("z on the integration interval requires side='+', '-' or 'pv'")
        z = z.copy()
        # keep real points off panel endpoints, where the local log terms of
        # adjacent panels would each diverge
        if np.any(on_cut):
            xr = z.real[on_cut]
            idx = np.clip(np.searchsorted(self.breaks, xr), 0, self.breaks.size - 1)
            near_lo = np.abs(xr - self.breaks[np.maximum(idx - 1, 0)])
            near_hi = np.abs(xr - self.breaks[idx])
            scale = np.maximum(1.0, np.abs(xr)) * _ENDPOINT_EPS
            bump = np.where((near_lo < scale) | (near_hi < scale), scale * 10.0, 0.0)
            xr = np.where(xr + bump < self.b, xr + bump, xr - bump)
            z[on_cut] = xr
        diff = self.nodes[None, :] - z[:, None]
        with np.errstate(divide="ignore", invalid="ignore"):
            # exact node hits are overwritten by the near-panel rule below
            K = self.weights[None, :] / diff
        w = (z[:, None] - self.centers[None, :]) / self.halfwidths[None, :]
        near = _bernstein_rho(w) < _RHO_NEAR
        m_idx, p_idx = np.nonzero(near)
        if m_idx.size:
            pw = _monomial_cauchy(w[m_idx, p_idx], side)
            lam = pw @ _VANDER_INV
            cols = p_idx[:, None] * ORDER + np.arange(ORDER)[None, :]
            K[m_idx[:, None], cols] = lam
        return K

    def cauchy(self, values, z, side=None):
        return self.cauchy_matrix(z, side) @ np.asarray(values)


def graded_breaks(t_max, n_grade=30, uniform_width=0.25, first=0.5):
    """Breakpoints graded geometrically toward 0, then uniform up to ``t_max``."""
    grade = first * 0.5 ** np.arange(n_grade, -1, -1)
    tail = np.arange(first + uniform_width, t_max + 0.5 * uniform_width, uniform_width)
    tail[-1] = t_max
    return np.concatenate([[0.0], grade, tail])
