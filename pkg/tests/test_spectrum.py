import numpy as np
import pytest

from stokes2.dispersion import lam, lambda0
from stokes2.exceptions import DegenerateInputError, NearCriticalError, NoDiscreteZeroError
from stokes2.spectrum import (
    BranchTable,
    SpectrumInfo,
    argument_principle_count,
    classify,
    coefficient_G,
    critical_frequency,
    find_eta0,
    index_transition_frequency,
    log_G_principal,
    mu0,
    theta_branch,
)


def test_mu0_is_root():
    assert abs(lambda0(mu0())) < 1e-14
    assert abs(mu0() - 0.924) < 1e-3


def test_critical_frequency_value_and_cache():
    w = critical_frequency()
    assert abs(w - 0.733) < 1e-3
    assert critical_frequency() is w or critical_frequency() == w


def test_transition_below_critical():
    assert index_transition_frequency() < critical_frequency()
    assert abs(index_transition_frequency() - 0.69729) < 1e-5


@pytest.mark.parametrize("w,kappa", [(1e-3, 1), (0.1, 1), (0.5, 1), (0.69, 1), (0.70, 0), (0.75, 0), (1.0, 0), (5.0, 0)])
def test_winding_agrees_with_argument_principle(w, kappa):
    assert BranchTable(w).winding == kappa
    assert abs(argument_principle_count(w) - 2 * kappa) < 0.05


@pytest.mark.parametrize("w", [1e-4, 0.05, 0.3, 0.6, 0.69])
def test_eta0_residual_and_selection(w):
    eta0 = find_eta0(w)
    assert abs(lam(eta0, w)) < 1e-12
    assert ((1 - 1j * w) / eta0).real > 0
    assert eta0.imag != 0


def test_eta0_small_frequency_asymptote():
    w = 1e-4
    assert abs(find_eta0(w) / ((1 + 1j) / (2 * np.sqrt(w))) - 1) < 1e-3


def test_eta0_reaches_mu0_at_transition():
    eta0 = find_eta0(index_transition_frequency() - 1e-4)
    assert abs(eta0 - mu0()) < 1e-2 and eta0.imag < 1e-3


@pytest.mark.parametrize("w", [0.7, 1.0, 3.0])
def test_no_discrete_zero_for_index_zero(w):
    with pytest.raises(NoDiscreteZeroError):
        find_eta0(w)


def test_guard_band():
    for wc in (critical_frequency(), index_transition_frequency()):
        with pytest.raises(NearCriticalError):
            classify(wc + 5e-7)
    assert classify(0.733).kappa == 0


def test_classify_contents():
    info = classify(0.3)
    assert info.kappa == 1 and info.eta0 is not None
    assert classify(2.0).eta0 is None


def test_spectrum_info_validation():
    with pytest.raises(ValueError):
        SpectrumInfo(kappa=1, eta0=None, omega1_star=0.7)
    with pytest.raises(ValueError):
        SpectrumInfo(kappa=2, eta0=None, omega1_star=0.7)


def test_log_G_principal_matches_direct():
    mu = np.linspace(0.05, 3, 50)
    G = coefficient_G(mu, 0.4)
    np.testing.assert_allclose(np.exp(log_G_principal(mu, 0.4)), G, rtol=1e-13)


def test_log_G_small_s_no_cancellation():
    # far in the tail |G - 1| ~ 1e-30: the real part must not round to 0
    lg = log_G_principal(np.array([8.5]), 1.0)[0]
    assert lg != 0 and abs(lg) < 1e-25


def test_coefficient_G_rejects_nonpositive():
    with pytest.raises(ValueError):
        coefficient_G(np.array([0.0, 1.0]), 0.5)


def test_coefficient_G_degenerate():
    with pytest.raises(DegenerateInputError):
        coefficient_G(np.array([mu0()]), index_transition_frequency())


def test_theta_branch_starts_at_zero_and_winds():
    grid = np.geomspace(1e-6, 8, 400)
    theta, k = theta_branch(0.3, grid)
    assert abs(theta[0]) < 1e-5 and k == 1
    assert abs(theta[-1] - np.pi) < 1e-6
    theta0, k0 = theta_branch(2.0, grid)
    assert k0 == 0 and abs(theta0[-1]) < 1e-6
