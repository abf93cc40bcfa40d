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

from typing import Dict, Tuple

import numpy as np

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.auto_printer import AutoPrinter
from qil.exceptions import InvalidPairException
from qil.fock.dual_mode_state import DualModeState
from qil.fock.optics import BEAMSPLITTER_MATRIX, apply_beamsplitter, apply_linear_optics, apply_nbs, apply_phase
from qil.qubits.coupling import apply_qubit_interaction
from qil.qubits.joint_state import JointState

def print(msg): AutoPrinter.static_print(msg)


#****************************************************************************************************
# Helpers
#****************************************************************************************************

def check_pair(j: JointState, pair: Tuple[int, int]) -> Tuple[int, int]:

    if len(pair) != 2:
        raise InvalidPairException(f"A pair needs two qubit indices, got {pair}")
    x, y = int(pair[0]), int(pair[1])
    if x == y or not (0 <= x < j.n_qubits and 0 <= y < j.n_qubits):
        raise InvalidPairException(f"Invalid pair {pair} for a {j.n_qubits}-qubit register")
    return x, y


def mz_mode_matrix(theta: float, zeros: int) -> np.ndarray:
    """
    Composite creation-operator transform BS . diag(exp(-i theta n0_couplings), exp(-i theta n1_couplings)) . BS
    for a branch in which `zeros` of the two coupled qubits read 0.
    For zeros = 2 this is a0+ -> -i exp(-i theta) (sin(theta) a0+ + cos(theta) a1+).
    """
    phases = np.diag([np.exp(-1j * theta * zeros), np.exp(-1j * theta * (2 - zeros))])
    return BEAMSPLITTER_MATRIX @ phases @ BEAMSPLITTER_MATRIX


#****************************************************************************************************
# Pipelines
#****************************************************************************************************

def run_mz(j: JointState, theta: float, pair: Tuple[int, int] = (0, 1)) -> JointState:
    """
    Mach-Zehnder pipeline: beamsplitter, qubit x interaction, qubit y interaction, beamsplitter.
    Single-port inputs use the composite mode transform per branch; everything else is evolved step by step.
    """

    x, y = check_pair(j, pair)

    if all(light.is_edge_supported() for _, (_, light) in j):

        cache: Dict[Tuple[int, int], DualModeState] = {}

        def evolve(key: str, light: DualModeState) -> DualModeState:
            zeros = (key[x] == "0") + (key[y] == "0")
            if (id(light), zeros) not in cache:
                cache[(id(light), zeros)] = apply_linear_optics(light, mz_mode_matrix(theta, zeros))
            return cache[(id(light), zeros)]

        return j.map_lights(evolve, pipeline="mz")

    print(f"Evolving {len(j)} branches step by step")
    first: Dict[int, DualModeState] = {}

    def split(key: str, light: DualModeState) -> DualModeState:
        if id(light) not in first:
            first[id(light)] = apply_beamsplitter(light)
        return first[id(light)]

    j = j.map_lights(split)
    j = apply_qubit_interaction(j, x, theta)
    j = apply_qubit_interaction(j, y, theta)
    return j.map_lights(lambda key, light: apply_beamsplitter(light), pipeline="mz")


def run_noon(j: JointState, theta: float, pair: Tuple[int, int] = (0, 1)) -> JointState:
    """
    NOON pipeline: qubit x interaction, qubit y interaction, nonlinear beamsplitter.
    With a NOON input a branch of net phase t ends in exp(-iNt)[cos(Nt)|N,0> - i sin(Nt)|0,N>].
    """

    x, y = check_pair(j, pair)

    cache: Dict[Tuple[int, int], DualModeState] = {}

    def evolve(key: str, light: DualModeState) -> DualModeState:
        zeros = (key[x] == "0") + (key[y] == "0")
        if (id(light), zeros) not in cache:
            shifted = apply_phase(apply_phase(light, theta * zeros, 0), theta * (2 - zeros), 1)
            cache[(id(light), zeros)] = apply_nbs(shifted)
        return cache[(id(light), zeros)]

    return j.map_lights(evolve, pipeline="noon")
