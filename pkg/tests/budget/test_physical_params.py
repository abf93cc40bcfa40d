import math
import warnings

import pytest

from qil.budget.physical_params import (EXACT_RATIO, LossModel, PhysicalParams, detuning_for_phase,
                                        theta_from_physics)
from qil.exceptions import ConfigurationException, LossModelException, OffResonanceWarning


def test_theta_from_physics():

    assert theta_from_physics(3.0, 0.1) == pytest.approx(1.326e-3, rel=1e-3)
    assert theta_from_physics(3.0, 0.0) == 0.0
    assert theta_from_physics(6.0, 0.1) == pytest.approx(theta_from_physics(3.0, 0.1) / 4)

    with pytest.raises(ConfigurationException):
        theta_from_physics(0.0, 0.1)


def test_detuning_inverts_phase():

    theta = theta_from_physics(3.0, 0.05)

    assert detuning_for_phase(theta, 3.0, rounded=False) == pytest.approx(0.05)
    assert detuning_for_phase(theta, 3.0) == pytest.approx(0.05 * 8.0 / EXACT_RATIO)


@pytest.mark.parametrize("kwargs,key", [(dict(n_photons=-1, theta=0.1), "n_photons"),
                                        (dict(n_photons=10, theta=0.1, cavity_passes=0), "cavity_passes"),
                                        (dict(n_photons=10, theta=math.nan), "theta"),
                                        (dict(n_photons=10, theta=-0.1), "theta"),
                                        (dict(n_photons=10, theta=0.1, waist_ratio=0.0), "waist_ratio"),
                                        (dict(n_photons=10, theta=0.1, detuning_ratio=0.0), "detuning_ratio")])
def test_invalid_params(kwargs, key):

    with pytest.raises(ConfigurationException) as info:
        PhysicalParams(**kwargs)
    assert info.value.key == key


def test_off_resonance_warning():

    with pytest.warns(OffResonanceWarning):
        PhysicalParams(10, 0.1, detuning_ratio=0.2)


def test_from_physics():

    params = PhysicalParams.from_physics(100, 3.0, 0.01, cavity_passes=5)

    assert params.theta == pytest.approx(theta_from_physics(3.0, 0.01))
    assert params.effective_theta == pytest.approx(5 * params.theta)
    assert params.detuning_ratio == 0.01


def test_at_phase_retunes_quietly():
    """
    Tests that retuning follows the rounded detuning without raising the off-resonance warning
    """

    params = PhysicalParams(1000, 0.0, waist_ratio=3.0)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        retuned = params.at_phase(0.01)

    assert not caught
    assert retuned.detuning_ratio == pytest.approx(0.72)
    assert params.at_phase(0.0).detuning_ratio is None
    assert PhysicalParams(10, 0.0).at_phase(0.2).detuning_ratio is None


def test_loss_model_check():

    LossModel(5.0).check(10)
    with pytest.raises(LossModelException):
        LossModel(20.0).check(10)
    with pytest.raises(LossModelException):
        LossModel(-1.0).check(10)
    with pytest.raises(LossModelException):
        LossModel(1.0, location="after_second_qubit").check(10)
