import numpy as np
import pytest

from qil.exceptions import DimensionMismatchException, InvalidStateSpecException, QubitIndexException
from qil.fock.dual_mode_state import DualModeState
from qil.fock.state_factory import make_state
from qil.fock.state_spec import StateSpec
from qil.qubits.coupling import (apply_qubit_interaction, as_qubit_ensemble, balanced_weight, make_joint,
                                 partial_trace_light, qubit_fidelity, reduced_density)
from qil.qubits.joint_state import JointState
from qil.qubits.mixed_ensemble import MixedEnsemble
from qil.qubits.qubit_state import QubitAmplitudes, QubitState


@pytest.fixture
def split_photon() -> DualModeState:
    return DualModeState.from_amplitudes({(1, 0): 1 / np.sqrt(2), (0, 1): 1 / np.sqrt(2)})


def test_make_joint_weights():

    x = QubitAmplitudes.normalize(1.0, 2.0)
    j = make_joint(DualModeState.basis(1, 0), [x, QubitAmplitudes(1.0, 0.0)])

    assert set(j.branches) == {"00", "10"}
    assert j.weight("10") == pytest.approx(2 / np.sqrt(5))
    assert j.norm2() == pytest.approx(1.0)

    with pytest.raises(DimensionMismatchException):
        make_joint(DualModeState.vacuum(), [])


def test_branch_keys_checked():
    with pytest.raises(DimensionMismatchException):
        JointState(2, {"0": (1.0, DualModeState.vacuum())})


def test_interaction_phase_follows_qubit():
    """
    Tests that photons in mode b only pick up a phase on branches where the qubit reads b
    """

    j = make_joint(DualModeState.basis(1, 0), [QubitAmplitudes.plus()])
    j = apply_qubit_interaction(j, 0, 0.4)
    rho = reduced_density(j)

    assert rho[0, 1] == pytest.approx(0.5 * np.exp(-0.4j))
    assert np.trace(rho).real == pytest.approx(1.0)

    with pytest.raises(QubitIndexException):
        apply_qubit_interaction(j, 1, 0.4)


def test_interactions_commute():
    """
    Tests that coupling qubit 0 then qubit 1 leaves every branch exactly as coupling 1 then 0
    """

    light = DualModeState.from_amplitudes({(2, 0): 0.6, (1, 1): 0.48j, (0, 2): 0.64})
    j = make_joint(light, [QubitAmplitudes.normalize(1.0, 0.4), QubitAmplitudes.normalize(0.7j, 1.0)])

    first = apply_qubit_interaction(apply_qubit_interaction(j, 0, 0.3), 1, 0.3)
    second = apply_qubit_interaction(apply_qubit_interaction(j, 1, 0.3), 0, 0.3)

    assert set(first.branches) == set(second.branches)
    for key in first.branches:
        assert first.weight(key) == second.weight(key)
        assert dict(first.light(key).items()) == pytest.approx(dict(second.light(key).items()), abs=1e-15)


def test_which_path_decoheres(split_photon: DualModeState):
    """
    Tests that a quarter-turn phase on a split photon makes the two qubit branches orthogonal
    """

    j = apply_qubit_interaction(make_joint(split_photon, [QubitAmplitudes.plus()]), 0, np.pi / 2)
    reduced = partial_trace_light(j)

    assert reduced.weights == pytest.approx([0.5, 0.5])
    assert qubit_fidelity(reduced, QubitState.product([QubitAmplitudes.plus()])) == pytest.approx(0.5)


def test_shared_light_keeps_product_pure():

    light = make_state(StateSpec.coherent(1.5))
    j = make_joint(light, [QubitAmplitudes.plus(), QubitAmplitudes.normalize(1.0, 1j)])
    reduced = partial_trace_light(j)

    assert reduced.is_pure()
    assert qubit_fidelity(reduced, QubitState.product([QubitAmplitudes.plus(), QubitAmplitudes.normalize(1.0, 1j)])) \
        == pytest.approx(1.0)


def test_balanced_weight():

    plus = QubitAmplitudes.plus()
    zero, one = QubitAmplitudes(1.0, 0.0), QubitAmplitudes(0.0, 1.0)

    assert balanced_weight(plus, plus) == pytest.approx(0.5)
    assert balanced_weight(zero, one) == pytest.approx(1.0)
    assert balanced_weight(zero, zero) == 0.0


def test_fidelity_of_pure_states():

    a = QubitState.from_basis({"00": 1.0, "11": 1.0})
    b = QubitState.from_basis({"00": 1.0, "11": -1.0})
    c = QubitState.from_basis({"00": 1.0})

    assert qubit_fidelity(a, a) == pytest.approx(1.0)
    assert qubit_fidelity(a, b) == pytest.approx(0.0)
    assert qubit_fidelity(a, c) == pytest.approx(0.5)

    with pytest.raises(DimensionMismatchException):
        qubit_fidelity(a, QubitState([1.0, 0.0]))


def test_as_qubit_ensemble_rejects_light():

    with pytest.raises(InvalidStateSpecException):
        as_qubit_ensemble(MixedEnsemble.pure(DualModeState.vacuum()))
    with pytest.raises(InvalidStateSpecException):
        as_qubit_ensemble(DualModeState.vacuum())
