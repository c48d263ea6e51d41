"""Dispersion function of the oscillating-plate kinetic problem.

The dispersion function is ``lam(z) = -1j*omega1 + lam0(z)`` with the
plasma-type function

    lam0(z) = 1/sqrt(pi) * int exp(-t**2) * t / (t - z) dt

which is analytic in the upper and lower half-planes separately and has a
jump across the real axis. For real arguments the principal value is
returned; it is real, so the boundary values on the two banks differ only by
the explicit term ``+/- 1j*s(mu)`` with ``s(mu) = sqrt(pi)*mu*exp(-mu**2)``.

Off the axis the Cauchy integral is expressed through the Faddeeva function
``w(z) = exp(-z**2) erfc(-1j z)``; on the axis through Dawson's integral.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import integrate, special

SQRT_PI = np.sqrt(np.pi)

# Beyond this modulus the asymptotic series is used (the Faddeeva route
# loses relative accuracy to cancellation in 1 + z*C(z)).
ASYMPTOTIC_RADIUS = 30.0
_N_ASYMPTOTIC = 12

# coefficients c_k of lam0(z) ~ -sum_k c_k z^(-2k): c_k = (2k-1)!!/2^k
_ASYM_COEFFS = np.array(
    [special.factorial2(2 * k - 1, exact=True) / 2.0**k for k in range(1, _N_ASYMPTOTIC + 1)]
)


@dataclass(frozen=True)
class Freq:
    """Dimensionless oscillation frequency ``omega1 = omega * tau``."""

    omega1: float

    def __post_init__(self):
        w = float(self.omega1)
        if not np.isfinite(w) or w <= 0.0:
            raise ValueError(f"omega1 must be a positive finite number, got {self.omega1!r}")
        object.__setattr__(self, "omega1", w)

    @property
    def z0(self) -> complex:
        return complex(1.0, -self.omega1)


@dataclass(frozen=True)
class BoundaryPair:
    """Boundary values of ``lam`` on the real axis (scalars or arrays)."""

    lam_plus: complex
    lam_minus: complex
    s: float
    lam0: float


def omega_of(f) -> float:
    """Accept a :class:`Freq` or a bare non-negative float."""
    if isinstance(f, Freq):
        return f.omega1
    w = float(f)
    if w < 0.0:
        raise ValueError("omega1 must be non-negative")
    return w


def s_func(mu):
    """Jump density ``sqrt(pi) * mu * exp(-mu**2)``."""
    mu = np.asarray(mu, dtype=float)
    return SQRT_PI * mu * np.exp(-mu * mu)


def _asymptotic_lambda0(z):
    zi2 = 1.0 / (z * z)
    acc = np.zeros_like(z)
    # Horner in 1/z^2, highest term first
    for c in _ASYM_COEFFS[::-1]:
        acc = (acc + c) * zi2
    return -acc


def _asymptotic_dlambda0(z):
    zi2 = 1.0 / (z * z)
    acc = np.zeros_like(z)
    for k in range(_N_ASYMPTOTIC, 0, -1):
        acc = (acc + 2 * k * _ASYM_COEFFS[k - 1]) * zi2
    return acc / z


def cauchy_gaussian(z):
    """Sectionally analytic ``1/sqrt(pi) * int exp(-t**2)/(t - z) dt``.

    Real arguments give the principal value ``-2*dawsn(x)``.
    """
    z = np.asarray(z)
    if not np.iscomplexobj(z):
        return -2.0 * special.dawsn(z.astype(float))
    out = np.empty(z.shape, dtype=complex)
    up = z.imag > 0
    lo = z.imag < 0
    on = ~(up | lo)
    out[up] = 1j * SQRT_PI * special.wofz(z[up])
    out[lo] = -1j * SQRT_PI * special.wofz(-z[lo])
    out[on] = -2.0 * special.dawsn(z[on].real)
    return out


def lambda0(z):
    """Plasma-type function ``lam0(z)``; principal value on the real axis.

    Real input yields real output. Complex input with zero imaginary part is
    also evaluated on the principal-value branch.
    """
    z = np.asarray(z)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    if np.iscomplexobj(z):
        out = np.empty(z.shape, dtype=complex)
    else:
        z = z.astype(float)
        out = np.empty(z.shape, dtype=float)
    big = np.abs(z) >= ASYMPTOTIC_RADIUS
    small = ~big
    if np.any(big):
        out[big] = _asymptotic_lambda0(z[big])
    if np.any(small):
        zs = z[small]
        out[small] = 1.0 + zs * cauchy_gaussian(zs)
    return out[0] if scalar else out


def lambda0_real(mu):
    """Real-axis ``lam0`` via ``1 - 2 mu**2 int_0^1 exp(-mu**2 (1 - t**2)) dt``.

    The integral equals ``dawsn(mu)/mu``, so this is ``1 - 2 mu dawsn(mu)``.
    """
    mu = np.asarray(mu, dtype=float)
    return lambda0(mu)


def dlambda0(z):
    """Derivative ``lam0'(z) = C(z) (1 - 2 z**2) - 2 z`` for z off the axis."""
    z = np.asarray(z, dtype=complex)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    out = np.empty(z.shape, dtype=complex)
    big = np.abs(z) >= ASYMPTOTIC_RADIUS
    small = ~big
    if np.any(big):
        out[big] = _asymptotic_dlambda0(z[big])
    if np.any(small):
        zs = z[small]
        out[small] = cauchy_gaussian(zs) * (1.0 - 2.0 * zs * zs) - 2.0 * zs
    return out[0] if scalar else out


def lam(z, f):
    """Dispersion function ``-1j*omega1 + lam0(z)``."""
    return lambda0(np.asarray(z, dtype=complex)) - 1j * omega_of(f)


def lambda_upper_entire(z, f):
    """Continuation of the upper-half-plane branch of ``lam`` to all of C.

    ``1 - 1j*omega1 + 1j*sqrt(pi)*z*w(z)`` is entire; its zeros in the upper
    half-plane are genuine zeros of ``lam``, those below are not.
    """
    z = np.asarray(z, dtype=complex)
    return 1.0 - 1j * omega_of(f) + 1j * SQRT_PI * z * special.wofz(z)


def dlambda_upper_entire(z):
    z = np.asarray(z, dtype=complex)
    c = 1j * SQRT_PI * special.wofz(z)
    return c * (1.0 - 2.0 * z * z) - 2.0 * z


def lambda_plus(mu, f):
    mu = np.asarray(mu, dtype=float)
    return lambda0(mu) + 1j * (s_func(mu) - omega_of(f))


def lambda_minus(mu, f):
    mu = np.asarray(mu, dtype=float)
    return lambda0(mu) - 1j * (s_func(mu) + omega_of(f))


def lambda_pv(mu, f):
    """Half-sum of the boundary values, ``lam0(mu) - 1j*omega1``."""
    return lambda0(np.asarray(mu, dtype=float)) - 1j * omega_of(f)


def lambda_boundary(mu, f) -> BoundaryPair:
    """Boundary values ``lam(mu +/- i0)`` from the Sokhotski formulas."""
    w = omega_of(f)
    mu = np.asarray(mu, dtype=float)
    l0 = lambda0(mu)
    s = s_func(mu)
    return BoundaryPair(
        lam_plus=l0 + 1j * (s - w),
        lam_minus=l0 - 1j * (s + w),
        s=s,
        lam0=l0,
    )


def laurent_tail(z, f, nterms=3):
    """Partial sum ``-1j*omega1 - 1/(2z^2) - 3/(4z^4) - 15/(8z^6)``.

    Only the first three coefficients are provided and the series is only
    accepted for ``|z| > 3``.
    """
    if not 0 <= nterms <= 3:
        raise ValueError("nterms must be between 0 and 3")
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) <= 3.0):
        raise ValueError("laurent_tail requires |z| > 3")
    out = -1j * omega_of(f) + np.zeros_like(z)
    for k in range(1, nterms + 1):
        out = out - _ASYM_COEFFS[k - 1] / z ** (2 * k)
    return out


def lambda0_pv_quadrature(mu, half_width=12.0, epsabs=1e-14):
    """Independent principal-value evaluation of ``lam0(mu)`` for validation.

    Uses singularity subtraction on ``[-R, R]``::

        PV int g/(t - mu) = int (g(t) - g(mu))/(t - mu) dt + g(mu) log((R - mu)/(mu + R))

    with ``g(t) = exp(-t**2)/sqrt(pi)`` and adaptive quadrature of the
    smooth remainder.
    """
    mu = float(mu)
    R = abs(mu) + half_width
    g_mu = np.exp(-mu * mu) / SQRT_PI
    dg_mu = -2.0 * mu * g_mu

    def smooth(t):
        d = t - mu
        if abs(d) < 1e-8:
            return dg_mu
        return (np.exp(-t * t) / SQRT_PI - g_mu) / d

    pieces = sorted({-R, mu, R})
    total = 0.0
    for a, b in zip(pieces[:-1], pieces[1:]):
        val, _ = integrate.quad(smooth, a, b, epsabs=epsabs, epsrel=1e-13, limit=400)
        total += val
    total += g_mu * np.log((R - mu) / (mu + R))
    return 1.0 + mu * total
