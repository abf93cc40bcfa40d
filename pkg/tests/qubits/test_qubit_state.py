import numpy as np
import pytest

from qil.exceptions import DimensionMismatchException, InvalidStateSpecException, QubitIndexException
from qil.qubits.qubit_state import QubitAmplitudes, QubitState


def test_amplitudes_must_be_normalized():

    with pytest.raises(InvalidStateSpecException):
        QubitAmplitudes(1.0, 1.0)
    with pytest.raises(InvalidStateSpecException):
        QubitAmplitudes.normalize(0.0, 0.0)

    q = QubitAmplitudes.normalize(3.0, 4.0j)
    assert q[0] == pytest.approx(0.6)
    assert q[1] == pytest.approx(0.8j)


def test_random_amplitudes_are_normalized(rng):

    for _ in range(10):
        q = QubitAmplitudes.random(rng)
        assert abs(q.chi0) ** 2 + abs(q.chi1) ** 2 == pytest.approx(1.0)


def test_bit_order():
    """
    Tests that qubit 0 is the most significant bit of the basis string
    """

    state = QubitState.product([QubitAmplitudes(1.0, 0.0), QubitAmplitudes(0.0, 1.0)])

    assert state.amplitude("01") == 1.0
    assert state.items() == [("01", 1.0 + 0j)]


def test_register_size_checked():

    with pytest.raises(DimensionMismatchException):
        QubitState([1.0, 0.0, 0.0])
    with pytest.raises(DimensionMismatchException):
        QubitState([1.0])
    with pytest.raises(DimensionMismatchException):
        QubitState.from_basis({"00": 1.0, "1": 1.0})


def test_from_basis_normalizes():

    bell = QubitState.from_basis({"00": 1.0, "11": 1.0})

    assert bell.norm2() == pytest.approx(1.0)
    assert bell.amplitude("11") == pytest.approx(1 / np.sqrt(2))


def test_single_qubit_gates():

    state = QubitState.from_basis({"00": 1.0})
    flipped = state.apply_single(1, np.array([[0, 1], [1, 0]]))

    assert flipped.amplitude("01") == 1.0
    assert state.with_phase(0, 0, np.pi / 2).amplitude("00") == pytest.approx(1j)

    with pytest.raises(QubitIndexException):
        state.apply_single(2, np.eye(2))


def test_projection_is_unnormalized():

    bell = QubitState.from_basis({"00": 1.0, "11": 1.0})
    projected = bell.project(0, 1)

    assert projected.norm2() == pytest.approx(0.5)
    assert projected.normalized().amplitude("11") == pytest.approx(1.0)


def test_fixed_phase():

    state = QubitState([0.6j, -0.8j]).with_fixed_phase()

    assert state.vector[1] == pytest.approx(0.8)
    assert state.vector[0] == pytest.approx(-0.6)


def test_reduced_density_of_bell_pair():

    bell = QubitState.from_basis({"00": 1.0, "11": 1.0})

    assert np.allclose(bell.reduced_density([0]), np.eye(2) / 2)
    assert np.allclose(bell.reduced_density([0, 1]), bell.density_matrix())


def test_reduced_density_keeps_order():

    state = QubitState.from_basis({"01": 1.0})

    assert state.reduced_density([1, 0])[2, 2] == pytest.approx(1.0)


def test_overlap_dimension_checked():
    with pytest.raises(DimensionMismatchException):
        QubitState([1, 0]).overlap(QubitState([1, 0, 0, 0]))
