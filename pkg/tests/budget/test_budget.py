import numpy as np
import pytest

from qil.budget.budget import (LimitScheme, QUOTED_PASSES, QUOTED_TF_BUDGET, cavity_budget, cavity_passes_for_targets,
                               epsilon_for_passes, fidelity_limit, first_zero_scaled, kbar_for_fidelity, n_for_fidelity,
                               one_loss_coefficient, one_loss_phase, p_spontaneous, sensitivity_window,
                               spontaneous_at_phase)
from qil.budget.physical_params import PhysicalParams
from qil.exceptions import ConfigurationException, FormulaDomainException, RegimeViolationException
from qil.interferometer.error_rates import x1_asymptotic
from qil.interferometer.outcome_record import Scheme


def test_spontaneous_emission():

    assert p_spontaneous(PhysicalParams(0, 0.01, waist_ratio=3.0)) == 0.0
    assert p_spontaneous(PhysicalParams(10, 0.01, detuning_ratio=0.02)) == pytest.approx(2 * 10 * 0.01 * 0.02)

    n_photons = 1000
    params = PhysicalParams(n_photons, 1.196 / n_photons, waist_ratio=3.0)
    assert n_photons * p_spontaneous(params) == pytest.approx(206, abs=0.5)

    with pytest.raises(ConfigurationException):
        p_spontaneous(PhysicalParams(10, 0.1))


def test_spontaneous_regime_violation():

    params = PhysicalParams(10, 1.196 / 10, waist_ratio=3.0)
    assert p_spontaneous(params) > 1.0
    with pytest.raises(RegimeViolationException):
        p_spontaneous(params, strict=True)


def test_scaled_budgets():
    """
    Tests the N P_sp coefficients at the first zero: 16 (W/lambda)^2 x1^2 for twin-Fock and NOON
    """

    assert 1000 * spontaneous_at_phase(first_zero_scaled(1000), 1000, 1, 3.0) == pytest.approx(208, abs=1)
    assert spontaneous_at_phase(np.pi / 2, 1, 1, 3.0) == pytest.approx(355, abs=1)
    assert spontaneous_at_phase(np.pi / 2, 1000, 10, 3.0) == pytest.approx(spontaneous_at_phase(np.pi / 2, 10000, 1, 3.0))


def test_first_zero_scaled():

    assert first_zero_scaled(1) == pytest.approx(np.pi / 4, abs=1e-7)
    assert first_zero_scaled(1e6) == x1_asymptotic(1e6)
    assert first_zero_scaled(2.5) == x1_asymptotic(2.5)


def test_cavity_passes():

    assert cavity_passes_for_targets(0.01, 3.0) == pytest.approx(6.63e4, rel=1e-3)
    assert cavity_passes_for_targets(1 - 1e-6, 3.0) < 1e-3
    assert epsilon_for_passes(cavity_passes_for_targets(0.01, 3.0), 3.0) == pytest.approx(0.01, rel=1e-6)

    for bad in [0.0, 1.0, 1.5]:
        with pytest.raises(FormulaDomainException):
            cavity_passes_for_targets(bad, 3.0)


def test_cavity_budget():

    budget = cavity_budget(0.01, 3.0)

    assert budget.passes_quoted == QUOTED_PASSES
    assert budget.mean_detected_photons == pytest.approx(4.6, abs=0.01)
    assert budget.passes_required == pytest.approx(cavity_passes_for_targets(0.01, 3.0))
    assert cavity_budget(0.02, 3.0).passes_quoted is None


def test_kbar_for_fidelity():

    assert kbar_for_fidelity(0.99, 0.01, 1000) / 1000 == pytest.approx(0.0044, abs=1e-4)
    assert kbar_for_fidelity(1.0, 0.01, 1000) == 0.0

    with pytest.raises(FormulaDomainException):
        kbar_for_fidelity(0.5, 0.01, 1000)
    with pytest.raises(FormulaDomainException):
        kbar_for_fidelity(0.9, 1.0, 1000)


def test_one_loss():

    assert one_loss_coefficient(3.0) == pytest.approx(2.54, abs=0.01)
    assert one_loss_coefficient(3.0, rounded=True) < one_loss_coefficient(3.0)

    # the envelope c / x and P_sp meet at the balancing phase
    x = one_loss_phase(1000)
    assert 0.33 / x == pytest.approx(spontaneous_at_phase(x, 1000, 1, 3.0, rounded=False))


def test_fidelity_limits():

    assert fidelity_limit(LimitScheme.TF, 2e4) == pytest.approx(0.99, abs=0.002)
    assert fidelity_limit(LimitScheme.TF, 1, cavity_passes=20000) == pytest.approx(0.99, abs=0.01)
    assert fidelity_limit(LimitScheme.NOON, 3.55e5) == pytest.approx(0.999, abs=1e-4)
    assert fidelity_limit(LimitScheme.TF_ONE_LOSS, 1e6) == pytest.approx(1 - one_loss_coefficient(3.0) / 100)
    assert fidelity_limit(LimitScheme.COHERENT_CAVITY, 1000, cavity_passes=66314) == pytest.approx(0.99, abs=1e-4)


def test_fidelity_limit_regime():

    with pytest.raises(RegimeViolationException):
        fidelity_limit(LimitScheme.NOON, 100)
    assert fidelity_limit(LimitScheme.NOON, 100, strict=False) < 0.0

    with pytest.raises(FormulaDomainException):
        fidelity_limit(LimitScheme.TF, 0)
    with pytest.raises(FormulaDomainException):
        fidelity_limit(LimitScheme.TF, 10, cavity_passes=0)


def test_n_for_fidelity():

    assert n_for_fidelity(LimitScheme.TF, 0.99) == pytest.approx(2e4, rel=0.05)
    assert n_for_fidelity(LimitScheme.NOON, 0.999) == pytest.approx(3.55e5, rel=0.01)
    assert n_for_fidelity(LimitScheme.TF_ONE_LOSS, 0.99) == pytest.approx((one_loss_coefficient(3.0) / 0.01) ** 3)
    assert n_for_fidelity(LimitScheme.TF_ONE_LOSS, 0.99) == pytest.approx(1.64e7, rel=0.01)
    assert n_for_fidelity(LimitScheme.NOON, 0.999, cavity_passes=10) == pytest.approx(3.55e4, rel=0.01)

    with pytest.raises(FormulaDomainException):
        n_for_fidelity(LimitScheme.COHERENT_CAVITY, 0.99)
    with pytest.raises(FormulaDomainException):
        n_for_fidelity(LimitScheme.TF, 1.0)


def test_twin_fock_sensitivity_window():

    window = sensitivity_window(1000, Scheme.TF)

    assert window.coefficient == pytest.approx(1.3, abs=0.15)
    assert window.symmetric_coefficient == pytest.approx(1.08, abs=0.1)
    assert window.quoted_delta_bound == pytest.approx(12.4 / np.sqrt(1000), abs=1e-3)
    assert window.theta_min < window.theta_star < window.theta_max
    assert window.theta_max - window.theta_star == pytest.approx(window.delta_bound / 1000)


def test_sensitivity_window_is_conservative():
    """
    Tests that the steep-side fit gives a narrower window than the curvature at the zero would
    """

    window = sensitivity_window(1000, Scheme.TF)
    symmetric_bound = np.sqrt((QUOTED_TF_BUDGET / 1000) / window.symmetric_coefficient)

    assert window.coefficient > window.symmetric_coefficient
    assert window.delta_bound < symmetric_bound


def test_noon_sensitivity_window():

    n_photons = 1000
    window = sensitivity_window(n_photons, Scheme.NOON)
    theta_one = np.pi / (2 * n_photons)

    assert window.theta_star == pytest.approx(theta_one)
    assert window.coefficient == pytest.approx(1.0, abs=0.15)
    assert window.quoted_theta_min == pytest.approx(theta_one - 8.1 * theta_one ** 1.5)
    assert window.quoted_theta_max == pytest.approx(theta_one + 8.1 * theta_one ** 1.5)


def test_sensitivity_window_domain():

    with pytest.raises(FormulaDomainException):
        sensitivity_window(100, Scheme.COHERENT)
    with pytest.raises(FormulaDomainException):
        sensitivity_window(100, Scheme.TF, fidelity_target=1.0)
