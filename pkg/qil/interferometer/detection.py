# -*- coding: utf-8 -*-
"""
Created on Monday 10/19/2026
Author: qil developers
Email: qil-dev@example.org
"""

#****************************************************************************************************
# Imports
#****************************************************************************************************

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# External
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from typing import List, Optional, Sequence, Tuple

import numpy as np

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.auto_printer import AutoPrinter
from qil.exceptions import SchemeMismatchException, ZeroProbabilityOutcomeException
from qil.interferometer.outcome_record import Measurement, OutcomeRecord, Subspace
from qil.qubits.coupling import qubit_fidelity
from qil.qubits.joint_state import JointState
from qil.qubits.mixed_ensemble import MixedEnsemble
from qil.qubits.qubit_state import QubitAmplitudes, QubitState


#****************************************************************************************************
# Global Variables
#****************************************************************************************************

NULL_VALUE = 0
PROBABILITY_FLOOR = 1e-15


#****************************************************************************************************
# Detector
#****************************************************************************************************

class Detector(AutoPrinter):
    """
    Photodetection at the interferometer output, with the qubit state conditioned on the result.
    coherent_count counts photons in the upper port (mode 0) and traces the lower port out,
    tf_number_difference resolves n0 - n1, and noon_presence reports whether the lower port (mode 1) fired.
    """

    def __init__(self, measurement: Measurement, probability_floor: float = PROBABILITY_FLOOR):
        self.measurement = measurement
        self.probability_floor = probability_floor

    #================================================================================
    # Public
    #================================================================================

    def outcome_distribution(self, j_out: JointState) -> List[OutcomeRecord]:
        """
        All outcomes with probability above the floor, in increasing order of value.
        """

        values, densities = self.__conditional_densities(j_out)
        records = []
        for value, rho in zip(values, densities):
            probability = float(np.trace(rho).real)
            if probability > self.probability_floor:
                records.append(self.__record(value, probability, rho))

        self.print(f"{self.measurement.value}: {len(records)} outcomes, total probability {sum(r.probability for r in records):.12f}")
        return records

    def collapse(self, j_out: JointState, observed_value: int) -> OutcomeRecord:
        """
        Conditions the qubits on one observed outcome.
        """

        values, densities = self.__conditional_densities(j_out)
        lookup = dict(zip(values, densities))
        rho = lookup.get(int(observed_value))
        probability = 0.0 if rho is None else float(np.trace(rho).real)
        if probability <= self.probability_floor:
            raise ZeroProbabilityOutcomeException(f"Outcome {observed_value} of {self.measurement.value} has zero probability")
        return self.__record(int(observed_value), probability, rho)

    #================================================================================
    # Internals
    #================================================================================

    def __labels(self, s: int) -> np.ndarray:
        l = np.arange(s + 1)
        if self.measurement == Measurement.COHERENT_COUNT:
            return s - l
        if self.measurement == Measurement.TF_NUMBER_DIFFERENCE:
            return s - 2 * l
        return (l > 0).astype(int)

    def __record(self, value: int, probability: float, rho: np.ndarray) -> OutcomeRecord:
        subspace = Subspace.BALANCED if value == NULL_VALUE else Subspace.IMBALANCED
        return OutcomeRecord(self.measurement, value, probability, MixedEnsemble.from_density(rho), subspace)

    def __conditional_densities(self, j_out: JointState) -> Tuple[List[int], np.ndarray]:
        """
        For every outcome value o, the unnormalized qubit density rho_o[a, b] = w_a conj(w_b) <P_o L_b | P_o L_a>.
        """

        if j_out.pipeline != self.measurement.pipeline:
            raise SchemeMismatchException(f"{self.measurement.value} needs the '{self.measurement.pipeline}' pipeline, "
                                          f"got '{j_out.pipeline}'")

        branches = list(j_out)
        sectors = sorted({s for _, (_, light) in branches for s in light.sectors})
        labels = np.concatenate([self.__labels(s) for s in sectors])
        offset = int(labels.min())
        labels = labels - offset
        size = int(labels.max()) + 1

        vectors = []
        for _, (weight, light) in branches:
            parts = [light.sector(s) if light.sector(s) is not None else np.zeros(s + 1, dtype=complex) for s in sectors]
            vectors.append(weight * np.concatenate(parts))

        dimension = 2 ** j_out.n_qubits
        densities = np.zeros((size, dimension, dimension), dtype=complex)
        indices = [int(key, 2) for key, _ in branches]
        for i, a in enumerate(indices):
            for k in range(i, len(indices)):
                b = indices[k]
                products = vectors[i] * np.conj(vectors[k])
                column = np.bincount(labels, weights=products.real, minlength=size) \
                    + 1j * np.bincount(labels, weights=products.imag, minlength=size)
                densities[:, a, b] = column
                densities[:, b, a] = np.conj(column)

        return [value + offset for value in range(size)], densities


#****************************************************************************************************
# Module functions
#****************************************************************************************************

def outcome_distribution(j_out: JointState, measurement: Measurement,
                         probability_floor: float = PROBABILITY_FLOOR) -> List[OutcomeRecord]:
    return Detector(measurement, probability_floor).outcome_distribution(j_out)


def collapse(j_out: JointState, measurement: Measurement, observed_value: int) -> OutcomeRecord:
    return Detector(measurement).collapse(j_out, observed_value)


def imbalanced_sign(measurement: Measurement, value: int) -> int:
    """
    Relative sign between the |00> and |11> components after a non-null outcome:
    (-1)^n for n upper-port photons, (-1)^m for a number difference 2m, and -1 for the NOON presence click.
    """
    if measurement == Measurement.COHERENT_COUNT:
        return -1 if value % 2 else 1
    if measurement == Measurement.TF_NUMBER_DIFFERENCE:
        return -1 if (value // 2) % 2 else 1
    return -1


def ideal_posterior(x: QubitAmplitudes, y: QubitAmplitudes, measurement: Measurement, value: int) -> Optional[QubitState]:
    """
    The error-free conditional pair state: the balanced part after a null, the signed imbalanced part otherwise.
    None when the outcome cannot occur without error.
    """

    if value == NULL_VALUE:
        amplitudes = {"01": x.chi0 * y.chi1, "10": x.chi1 * y.chi0}
    else:
        amplitudes = {"00": x.chi0 * y.chi0, "11": imbalanced_sign(measurement, value) * x.chi1 * y.chi1}

    if all(abs(v) == 0.0 for v in amplitudes.values()):
        return None
    return QubitState.from_basis(amplitudes)


def factorized_posterior(x: QubitAmplitudes, y: QubitAmplitudes, measurement: Measurement, value: int,
                         err: float) -> QubitState:
    """
    Conditional pair state in the factorized form: a null keeps the balanced part plus sqrt(err) times the
    imbalanced part, a non-null keeps the signed imbalanced part.
    """

    if value != NULL_VALUE:
        return ideal_posterior(x, y, measurement, value)

    root = np.sqrt(err)
    return QubitState.from_basis({"00": root * x.chi0 * y.chi0, "01": x.chi0 * y.chi1,
                                  "10": x.chi1 * y.chi0, "11": root * x.chi1 * y.chi1})


def average_fidelity(records: Sequence[OutcomeRecord], x: QubitAmplitudes, y: QubitAmplitudes) -> float:
    """
    Outcome-averaged fidelity sum_o P(o) F(posterior_o, ideal_o) for a two-qubit run.
    Outcomes without an error-free counterpart contribute zero.
    """

    total = 0.0
    for record in records:
        ideal = ideal_posterior(x, y, record.measurement, record.value)
        if ideal is not None:
            total += record.probability * qubit_fidelity(record.posterior, ideal)
    return total
