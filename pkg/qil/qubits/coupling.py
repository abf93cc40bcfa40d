# -*- coding: utf-8 -*-
"""
Created on Monday 10/19/2026
Author: qil developers
Email: qil-dev@example.org

Qubit-light coupling: product construction, the conditional phase interaction, and the reductions
that take the light out of a joint state.
"""

#****************************************************************************************************
# Imports
#****************************************************************************************************

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# External
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from typing import List, Sequence, Union

import numpy as np

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.exceptions import DimensionMismatchException, InvalidStateSpecException
from qil.fock.dual_mode_state import DualModeState
from qil.fock.optics import apply_phase, inner_product
from qil.qubits.joint_state import JointState
from qil.qubits.mixed_ensemble import MixedEnsemble
from qil.qubits.qubit_state import QubitAmplitudes, QubitState
from qil.utils import bits_of


QubitLike = Union[QubitState, JointState, MixedEnsemble]


#****************************************************************************************************
# Construction and interaction
#****************************************************************************************************

def make_joint(light: DualModeState, qubits: Sequence[QubitAmplitudes]) -> JointState:
    """
    Product state: every branch carries the same light and the weight prod_i chi_i[bit_i].
    Branches with zero weight are left out.
    """

    if len(qubits) < 1:
        raise DimensionMismatchException("At least one qubit is needed")

    n_qubits = len(qubits)
    branches = {}
    for index in range(2 ** n_qubits):
        key = bits_of(index, n_qubits)
        weight = 1.0 + 0j
        for position, qubit in enumerate(qubits):
            weight *= qubit[int(key[position])]
        if weight != 0:
            branches[key] = (weight, light)

    return JointState(n_qubits, branches)


def apply_qubit_interaction(j: JointState, qubit_index: int, theta: float) -> JointState:
    """
    Each photon in mode b picks up exp(-i theta) on the branches where the qubit reads b.
    """
    j.check_index(qubit_index)
    return j.map_lights(lambda key, light: apply_phase(light, theta, int(key[qubit_index])))


def balanced_weight(x: QubitAmplitudes, y: QubitAmplitudes) -> float:
    """
    Weight of {|01>, |10>} in the product x (x) y.
    """
    return abs(x.chi0 * y.chi1) ** 2 + abs(x.chi1 * y.chi0) ** 2


#****************************************************************************************************
# Reductions
#****************************************************************************************************

def reduced_density(j: JointState) -> np.ndarray:
    """
    Qubit density matrix with the light traced out; not renormalized, so its trace is the joint norm.
    rho[a, b] = w_a conj(w_b) <L_b|L_a>.
    """

    dimension = 2 ** j.n_qubits
    rho = np.zeros((dimension, dimension), dtype=complex)
    branches = list(j)
    for i, (key_a, (w_a, light_a)) in enumerate(branches):
        for key_b, (w_b, light_b) in branches[i:]:
            value = w_a * np.conj(w_b) * inner_product(light_b, light_a)
            a, b = int(key_a, 2), int(key_b, 2)
            rho[a, b] = value
            rho[b, a] = np.conj(value)
    return rho


def partial_trace_light(j: JointState) -> MixedEnsemble:
    """
    Exact reduced qubit state as an eigen-ensemble of pure qubit states, renormalized to unit trace.
    """
    return MixedEnsemble.from_density(reduced_density(j))


def as_qubit_ensemble(state: QubitLike) -> MixedEnsemble:

    if isinstance(state, QubitState):
        return MixedEnsemble.pure(state.normalized())
    if isinstance(state, JointState):
        return partial_trace_light(state)
    if isinstance(state, MixedEnsemble):
        parts: List = []
        for weight, member in state:
            if isinstance(member, QubitState):
                parts.append((weight, MixedEnsemble.pure(member.normalized())))
            elif isinstance(member, JointState):
                parts.append((weight, partial_trace_light(member)))
            else:
                raise InvalidStateSpecException(f"Cannot reduce an ensemble member of type {type(member).__name__}")
        return MixedEnsemble.merge(parts)
    raise InvalidStateSpecException(f"Cannot reduce a {type(state).__name__} to qubits")


def qubit_fidelity(a: QubitLike, b: QubitLike) -> float:
    """
    tr(rho rho') = sum_ij w_i w'_j |<psi_i|psi'_j>|^2, which is |<psi|psi'>|^2 for two pure states.
    """

    first, second = as_qubit_ensemble(a), as_qubit_ensemble(b)
    if first.n_qubits != second.n_qubits:
        raise DimensionMismatchException(f"Cannot compare {first.n_qubits} and {second.n_qubits} qubits")

    return float(sum(w1 * w2 * abs(m1.overlap(m2)) ** 2 for w1, m1 in first for w2, m2 in second))
