import numpy as np
import pytest

from qil.exceptions import InvalidStateSpecException, TailToleranceException
from qil.fock.state_factory import StateFactory, make_state
from qil.fock.state_spec import StateKind, StateSpec


@pytest.fixture
def factory() -> StateFactory:
    return StateFactory()


def test_fock_and_twin_fock(factory: StateFactory):

    assert factory.make_state(StateSpec.fock(2, 5)).amplitude(2, 5) == 1.0
    assert factory.make_state(StateSpec.twin_fock(7)).amplitude(7, 7) == 1.0
    assert StateSpec.twin_fock(7).mean_photons == 14.0


def test_noon_phase(factory: StateFactory):

    state = factory.make_state(StateSpec.noon(3, np.pi / 2))

    assert state.amplitude(3, 0) == pytest.approx(1 / np.sqrt(2))
    assert state.amplitude(0, 3) == pytest.approx(1j / np.sqrt(2))
    assert factory.make_state(StateSpec.noon(0)).amplitude(0, 0) == 1.0


@pytest.mark.parametrize("mean", [0.5, 10.0, 400.0])
def test_coherent_window(factory: StateFactory, mean: float):
    """
    Tests that the kept window is normalized, holds the right mean and discards less than the tolerance
    """

    state = factory.make_state(StateSpec.coherent(np.sqrt(mean)), 1e-10)

    assert state.norm2() == pytest.approx(1.0)
    assert state.tail_mass < 1e-10
    assert state.expectation_number(0) == pytest.approx(mean, rel=1e-6)
    assert state.expectation_number(1) == 0.0


def test_coherent_lower_port(factory: StateFactory):

    state = factory.make_state(StateSpec.coherent(2.0, port=1))

    assert state.expectation_number(1) == pytest.approx(4.0, rel=1e-6)
    assert state.expectation_number(0) == 0.0


def test_coherent_vacuum(factory: StateFactory):

    state = factory.make_state(StateSpec.coherent(0.0))
    assert state.amplitude(0, 0) == 1.0


def test_poisson_window_shrinks_with_tolerance():

    lo_loose, hi_loose, _ = StateFactory.poisson_window(100.0, 1e-6)
    lo_tight, hi_tight, discarded = StateFactory.poisson_window(100.0, 1e-12)

    assert lo_tight <= lo_loose <= 100 <= hi_loose <= hi_tight
    assert discarded < 1e-12


def test_coherent_noon_is_normalized(factory: StateFactory):

    state = factory.make_state(StateSpec.coherent_noon(1.5))

    assert state.norm2() == pytest.approx(1.0)
    assert state.is_edge_supported()
    assert state.expectation_number(0) == pytest.approx(state.expectation_number(1))


@pytest.mark.parametrize("tolerance", [0.0, 1e-5, -1.0])
def test_tail_tolerance_checked(tolerance: float):
    with pytest.raises(TailToleranceException):
        make_state(StateSpec.coherent(1.0), tolerance)


@pytest.mark.parametrize("build", [lambda: StateSpec.fock(-1, 0),
                                   lambda: StateSpec.fock(1.5, 0),
                                   lambda: StateSpec.twin_fock(True),
                                   lambda: StateSpec.coherent(float("inf")),
                                   lambda: StateSpec.coherent(1.0, port=2),
                                   lambda: StateSpec.noon(2, float("nan"))])
def test_invalid_specs(build):
    with pytest.raises(InvalidStateSpecException):
        build()


def test_spec_kinds():

    assert StateSpec.coherent(1.0).kind == StateKind.COHERENT
    assert StateSpec.coherent(3.0).mean_photons == pytest.approx(9.0)
    assert StateSpec.noon(4).n == 4
