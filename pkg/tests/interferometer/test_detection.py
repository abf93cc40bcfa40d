import numpy as np
import pytest

from qil.exceptions import SchemeMismatchException, ZeroProbabilityOutcomeException
from qil.fock.dual_mode_state import DualModeState
from qil.fock.state_factory import make_state
from qil.fock.state_spec import StateSpec
from qil.interferometer.detection import (average_fidelity, collapse, factorized_posterior, ideal_posterior,
                                          imbalanced_sign, outcome_distribution)
from qil.interferometer.error_rates import false_null_rate, fidelities
from qil.interferometer.outcome_record import Measurement, Scheme, Subspace
from qil.interferometer.pipelines import run_mz, run_noon
from qil.qubits.coupling import balanced_weight, make_joint, qubit_fidelity
from qil.qubits.qubit_state import QubitAmplitudes, QubitState


def light_for(scheme: Scheme, n_photons: int):
    if scheme == Scheme.COHERENT:
        return make_state(StateSpec.coherent(np.sqrt(n_photons)))
    if scheme == Scheme.TF:
        return DualModeState.basis(n_photons, n_photons)
    return make_state(StateSpec.noon(n_photons))


def run(scheme: Scheme, n_photons: int, theta: float, x: QubitAmplitudes, y: QubitAmplitudes):
    j = make_joint(light_for(scheme, n_photons), [x, y])
    return run_noon(j, theta) if scheme == Scheme.NOON else run_mz(j, theta)


@pytest.mark.parametrize("scheme,n_photons,theta", [(Scheme.COHERENT, 50, 0.2),
                                                    (Scheme.TF, 6, 0.15),
                                                    (Scheme.NOON, 5, 0.2)])
def test_probabilities_sum_to_one(scheme, n_photons, theta):

    x, y = QubitAmplitudes.normalize(1.0, 0.7j), QubitAmplitudes.normalize(0.3, 1.0)
    records = outcome_distribution(run(scheme, n_photons, theta, x, y), scheme.measurement)

    assert sum(r.probability for r in records) == pytest.approx(1.0, abs=1e-8)
    assert [r.value for r in records] == sorted(r.value for r in records)
    for record in records:
        assert sum(record.posterior.weights) == pytest.approx(1.0)


def test_scheme_mismatch():

    j_out = run(Scheme.TF, 2, 0.1, QubitAmplitudes.plus(), QubitAmplitudes.plus())
    with pytest.raises(SchemeMismatchException):
        outcome_distribution(j_out, Measurement.NOON_PRESENCE)


def test_twin_fock_without_phase_always_null():

    records = outcome_distribution(run(Scheme.TF, 1, 0.0, QubitAmplitudes.plus(), QubitAmplitudes.plus()),
                                   Measurement.TF_NUMBER_DIFFERENCE)

    assert len(records) == 1
    assert records[0].value == 0 and records[0].is_null
    assert records[0].probability == pytest.approx(1.0)


def test_noon_balanced_input_never_fires():

    x, y = QubitAmplitudes(1.0, 0.0), QubitAmplitudes(0.0, 1.0)
    records = outcome_distribution(run(Scheme.NOON, 3, np.pi / 6, x, y), Measurement.NOON_PRESENCE)

    assert [(r.value, r.subspace) for r in records] == [(0, Subspace.BALANCED)]
    assert records[0].probability == pytest.approx(1.0)


def test_coherent_null_probability():
    """
    Tests P(0) = Lambda (1 - eps) + eps for N=1000 at N theta^2 = 9
    """

    n_photons = 1000
    theta = np.sqrt(9.0 / n_photons)
    plus = QubitAmplitudes.plus()
    records = outcome_distribution(run(Scheme.COHERENT, n_photons, theta, plus, plus), Measurement.COHERENT_COUNT)
    null = [r for r in records if r.is_null][0]

    eps = false_null_rate(Scheme.COHERENT, n_photons, theta)
    assert null.probability == pytest.approx(0.5 * (1 - eps) + eps, abs=1e-10)
    assert eps == pytest.approx(np.exp(-9.0), abs=5.0 / n_photons)


def test_coherent_null_posterior_fidelity():

    n_photons, theta = 100, 0.25
    plus = QubitAmplitudes.plus()
    record = collapse(run(Scheme.COHERENT, n_photons, theta, plus, plus), Measurement.COHERENT_COUNT, 0)

    eps = false_null_rate(Scheme.COHERENT, n_photons, theta)
    f_nul, _ = fidelities(0.5, eps)
    ideal = ideal_posterior(plus, plus, Measurement.COHERENT_COUNT, 0)

    assert qubit_fidelity(record.posterior, ideal) == pytest.approx(f_nul, abs=1e-9)


@pytest.mark.parametrize("value,sign", [(2, -1), (4, 1)])
def test_twin_fock_posterior_sign(value: int, sign: int):
    """
    Tests that a difference 2m leaves chi0 chi0 |00> + (-1)^m chi1 chi1 |11>
    """

    x, y = QubitAmplitudes.normalize(1.0, 0.5), QubitAmplitudes.normalize(0.8, 1.0j)
    record = collapse(run(Scheme.TF, 3, 0.4, x, y), Measurement.TF_NUMBER_DIFFERENCE, value)
    expected = QubitState.from_basis({"00": x.chi0 * y.chi0, "11": sign * x.chi1 * y.chi1})

    assert record.subspace == Subspace.IMBALANCED
    assert record.posterior.is_pure()
    assert qubit_fidelity(record.posterior, expected) == pytest.approx(1.0, abs=1e-10)


def test_noon_click_posterior():

    x, y = QubitAmplitudes.normalize(1.0, 0.5), QubitAmplitudes.normalize(0.8, 1.0j)
    record = collapse(run(Scheme.NOON, 4, 0.3, x, y), Measurement.NOON_PRESENCE, 1)
    ideal = ideal_posterior(x, y, Measurement.NOON_PRESENCE, 1)

    assert record.probability == pytest.approx((1 - balanced_weight(x, y)) * np.sin(4 * 0.3) ** 2)
    assert qubit_fidelity(record.posterior, ideal) == pytest.approx(1.0, abs=1e-10)


def test_noon_null_posterior_matches_factorized_form():

    x, y = QubitAmplitudes.normalize(1.0, 0.5), QubitAmplitudes.normalize(0.8, 1.0j)
    theta = 0.3
    record = collapse(run(Scheme.NOON, 4, theta, x, y), Measurement.NOON_PRESENCE, 0)
    factorized = factorized_posterior(x, y, Measurement.NOON_PRESENCE, 0, np.cos(4 * theta) ** 2).normalized()

    assert qubit_fidelity(record.posterior, factorized) == pytest.approx(1.0, abs=1e-10)


def test_collapse_on_impossible_outcome():

    j_out = run(Scheme.TF, 2, 0.0, QubitAmplitudes.plus(), QubitAmplitudes.plus())
    with pytest.raises(ZeroProbabilityOutcomeException):
        collapse(j_out, Measurement.TF_NUMBER_DIFFERENCE, 2)
    with pytest.raises(ZeroProbabilityOutcomeException):
        collapse(j_out, Measurement.TF_NUMBER_DIFFERENCE, 40)


def test_imbalanced_signs():

    assert imbalanced_sign(Measurement.COHERENT_COUNT, 3) == -1
    assert imbalanced_sign(Measurement.COHERENT_COUNT, 4) == 1
    assert imbalanced_sign(Measurement.TF_NUMBER_DIFFERENCE, -2) == -1
    assert imbalanced_sign(Measurement.TF_NUMBER_DIFFERENCE, 4) == 1
    assert imbalanced_sign(Measurement.NOON_PRESENCE, 1) == -1


def test_ideal_posterior_absent():
    zero = QubitAmplitudes(1.0, 0.0)
    assert ideal_posterior(zero, zero, Measurement.COHERENT_COUNT, 0) is None


@pytest.mark.parametrize("scheme,n_photons,theta", [(Scheme.COHERENT, 30, 0.3),
                                                    (Scheme.TF, 4, 0.2),
                                                    (Scheme.NOON, 3, 0.3)])
def test_average_fidelity_law(scheme, n_photons, theta, rng):
    """
    Tests f_avg = 1 - (1 - Lambda) err over all outcomes for random qubit pairs
    """

    err = false_null_rate(scheme, n_photons, theta)
    for _ in range(20):
        x, y = QubitAmplitudes.random(rng), QubitAmplitudes.random(rng)
        records = outcome_distribution(run(scheme, n_photons, theta, x, y), scheme.measurement)
        _, f_avg = fidelities(balanced_weight(x, y), err)

        assert average_fidelity(records, x, y) == pytest.approx(f_avg, abs=1e-6)
