import numpy as np
import pytest

from qil.exceptions import InvalidPairException, NoonDomainException
from qil.fock.dual_mode_state import DualModeState
from qil.fock.optics import apply_beamsplitter
from qil.fock.state_factory import make_state
from qil.fock.state_spec import StateSpec
from qil.interferometer.pipelines import check_pair, mz_mode_matrix, run_mz, run_noon
from qil.qubits.coupling import apply_qubit_interaction, make_joint
from qil.qubits.qubit_state import QubitAmplitudes


@pytest.fixture
def plus_pair():
    return [QubitAmplitudes.plus(), QubitAmplitudes.plus()]


def test_check_pair():

    j = make_joint(DualModeState.basis(1, 1), [QubitAmplitudes.plus()] * 3)

    assert check_pair(j, (2, 0)) == (2, 0)
    for pair in [(0, 0), (0, 3), (-1, 1), (0, 1, 2)]:
        with pytest.raises(InvalidPairException):
            check_pair(j, pair)


def test_mode_matrix_is_unitary():

    for zeros in range(3):
        matrix = mz_mode_matrix(0.37, zeros)
        assert np.allclose(matrix @ matrix.conj().T, np.eye(2))


@pytest.mark.parametrize("zeros", [0, 1, 2])
def test_mode_matrix_closed_form(zeros: int):
    """
    Tests the composite transform -i exp(-i theta) [[sin phi, cos phi], [cos phi, -sin phi]], phi = theta sigma_z
    """

    theta = 0.37
    phi = theta * (zeros - 1)
    expected = -1j * np.exp(-1j * theta) * np.array([[np.sin(phi), np.cos(phi)], [np.cos(phi), -np.sin(phi)]])

    assert np.allclose(mz_mode_matrix(theta, zeros), expected, atol=1e-14)


def test_single_photon_follows_closed_form(plus_pair):
    """
    Tests branch by branch that a photon entering the upper port leaves as
    -i exp(-i theta) [sin(theta sigma_z) |1,0> + cos(theta sigma_z) |0,1>], against explicit step-by-step evolution
    """

    theta = 0.41
    j = make_joint(DualModeState.basis(1, 0), plus_pair)
    j_out = run_mz(j, theta)

    steps = j.map_lights(lambda key, light: apply_beamsplitter(light))
    steps = apply_qubit_interaction(apply_qubit_interaction(steps, 0, theta), 1, theta)
    steps = steps.map_lights(lambda key, light: apply_beamsplitter(light))

    for key, sigma_z in [("00", 1), ("01", 0), ("10", 0), ("11", -1)]:
        factor = -1j * np.exp(-1j * theta)
        for light in (j_out.light(key), steps.light(key)):
            assert light.amplitude(1, 0) == pytest.approx(factor * np.sin(theta * sigma_z), abs=1e-12)
            assert light.amplitude(0, 1) == pytest.approx(factor * np.cos(theta * sigma_z), abs=1e-12)


def test_mz_without_phase_decouples(plus_pair):
    """
    Tests that at theta = 0 every branch carries the same light
    """

    j_out = run_mz(make_joint(DualModeState.basis(1, 1), plus_pair), 0.0)
    lights = [light for _, (_, light) in j_out]

    for light in lights:
        assert abs(light.amplitude(1, 1)) == pytest.approx(1.0)
    assert j_out.pipeline == "mz"


def test_mz_twin_fock_single_pair(plus_pair):
    """
    Tests that N=1 in the |00> branch keeps |1,1> with amplitude cos(2 theta)
    """

    theta = 0.3
    j_out = run_mz(make_joint(DualModeState.basis(1, 1), plus_pair), theta)
    light = j_out.light("00")

    assert abs(light.amplitude(1, 1)) == pytest.approx(abs(np.cos(2 * theta)))
    assert abs(light.amplitude(2, 0)) == pytest.approx(abs(np.sin(2 * theta)) / np.sqrt(2))
    assert light.norm2() == pytest.approx(1.0)


def test_mz_coherent_balanced_branch_exits_lower_port(plus_pair):

    light = make_state(StateSpec.coherent(np.sqrt(20.0)))
    j_out = run_mz(make_joint(light, plus_pair), 0.2)

    for key in ("01", "10"):
        assert j_out.light(key).count_distribution(0).get(0, 0.0) == pytest.approx(1.0)
    assert j_out.light("00").count_distribution(0).get(0, 0.0) == pytest.approx(np.exp(-20.0 * np.sin(0.2) ** 2))


def test_mz_step_by_step_is_unitary():

    j = make_joint(DualModeState.basis(3, 3), [QubitAmplitudes.normalize(1.0, 2.0), QubitAmplitudes.normalize(1j, 1.0)])
    j_out = run_mz(j, 0.41)

    assert j_out.norm2() == pytest.approx(1.0)


def test_mz_on_larger_register_leaves_others(plus_pair):

    j = make_joint(DualModeState.basis(2, 2), plus_pair + [QubitAmplitudes(1.0, 0.0)])
    j_out = run_mz(j, 0.2, (0, 2))

    # both coupled qubits read 0 in branch 010
    assert abs(j_out.light("010").amplitude(2, 2)) < 1.0
    assert set(j_out.branches) == {"000", "010", "100", "110"}


def test_noon_pipeline_zero_phase(plus_pair):

    j_out = run_noon(make_joint(make_state(StateSpec.noon(4)), plus_pair), 0.0)

    for _, (_, light) in j_out:
        assert abs(light.amplitude(4, 0)) == pytest.approx(1.0)
    assert j_out.pipeline == "noon"


def test_noon_pipeline_quarter_turn(plus_pair):
    """
    Tests that N=2, theta=pi/4 sends the |00> branch entirely to the lower port
    while the balanced branches stay in the upper one
    """

    j_out = run_noon(make_joint(make_state(StateSpec.noon(2)), plus_pair), np.pi / 4)

    assert abs(j_out.light("00").amplitude(2, 0)) < 1e-12
    assert abs(j_out.light("00").amplitude(0, 2)) == pytest.approx(1.0)
    assert abs(j_out.light("01").amplitude(2, 0)) == pytest.approx(1.0)


def test_noon_pipeline_rejects_twin_fock(plus_pair):
    with pytest.raises(NoonDomainException):
        run_noon(make_joint(DualModeState.basis(1, 1), plus_pair), 0.1)
