# -*- coding: utf-8 -*-
"""
Created on Monday 10/19/2026
Author: qil developers
Email: qil-dev@example.org

Single-qubit pulses, phase imprints and projective qubit measurement on pure or mixed registers.
"""

#****************************************************************************************************
# Imports
#****************************************************************************************************

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# External
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from dataclasses import dataclass
from typing import List, Sequence, Union

import numpy as np

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.exceptions import ZeroProbabilityOutcomeException
from qil.qubits.mixed_ensemble import MixedEnsemble
from qil.qubits.qubit_state import QubitState


Register = Union[QubitState, MixedEnsemble]


#****************************************************************************************************
# Global Variables
#****************************************************************************************************

PI_PULSE = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)

# |0> -> (|0> - i|1>)/sqrt(2), |1> -> (-i|0> + |1>)/sqrt(2)
HALF_PI_PULSE = np.array([[1.0, -1j], [-1j, 1.0]], dtype=complex) / np.sqrt(2.0)

OUTCOME_FLOOR = 1e-15


#****************************************************************************************************
# Gates
#****************************************************************************************************

def apply_gate(register: Register, qubit: int, matrix: np.ndarray) -> Register:
    if isinstance(register, MixedEnsemble):
        return register.map(lambda state: state.apply_single(qubit, matrix))
    return register.apply_single(qubit, matrix)


def pi_pulse(register: Register, qubit: int) -> Register:
    return apply_gate(register, qubit, PI_PULSE)


def half_pi_pulse(register: Register, qubit: int) -> Register:
    return apply_gate(register, qubit, HALF_PI_PULSE)


def phase_imprint(register: Register, qubit: int, basis_state: int, phase: float) -> Register:
    """
    Multiplies the |basis_state> component of one qubit by exp(i phase).
    """
    matrix = np.eye(2, dtype=complex)
    matrix[basis_state, basis_state] = np.exp(1j * phase)
    return apply_gate(register, qubit, matrix)


#****************************************************************************************************
# Measurement
#****************************************************************************************************

@dataclass(frozen=True)
class QubitOutcome:
    bit: int
    probability: float
    posterior: Register


def measurement_branches(register: Register, qubit: int) -> List[QubitOutcome]:
    """
    Both results of a computational-basis measurement, with normalized posteriors.
    Results below OUTCOME_FLOOR are left out.
    """

    members = register.members if isinstance(register, MixedEnsemble) else [(1.0, register)]
    outcomes = []
    for bit in (0, 1):
        projected = []
        for weight, state in members:
            part = state.project(qubit, bit)
            norm2 = part.norm2()
            if norm2 > 0.0:
                projected.append((weight * norm2, part.normalized()))

        probability = sum(w for w, _ in projected)
        if probability <= OUTCOME_FLOOR:
            continue
        if isinstance(register, MixedEnsemble):
            posterior = MixedEnsemble(projected, renormalize=True)
        else:
            posterior = projected[0][1]
        outcomes.append(QubitOutcome(bit, float(probability), posterior))

    return outcomes


def measure_qubit(register: Register, qubit: int, rng: np.random.Generator) -> QubitOutcome:
    """
    Draws one measurement result.
    """

    outcomes = measurement_branches(register, qubit)
    if not outcomes:
        raise ZeroProbabilityOutcomeException(f"Qubit {qubit} has no outcome with non-zero probability")
    probabilities = np.array([o.probability for o in outcomes])
    index = int(rng.choice(len(outcomes), p=probabilities / probabilities.sum()))
    return outcomes[index]


#****************************************************************************************************
# Reduction
#****************************************************************************************************

def reduce_to(register: Register, keep: Sequence[int]) -> MixedEnsemble:
    """
    State of the kept qubits, in the given order, with the rest traced out.
    """
    members = register.members if isinstance(register, MixedEnsemble) else [(1.0, register)]
    density = sum(weight * state.reduced_density(keep) for weight, state in members)
    return MixedEnsemble.from_density(density)
