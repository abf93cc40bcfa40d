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

from __future__ import annotations

from typing import Callable, Dict, Iterator, Mapping, Optional, Tuple

import numpy as np

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.exceptions import DimensionMismatchException, QubitIndexException
from qil.fock.dual_mode_state import DualModeState
from qil.qubits.qubit_state import QubitState


#****************************************************************************************************
# Joint State
#****************************************************************************************************

class JointState:
    """
    Qubit register entangled with the two-mode field.
    Every interaction is diagonal in the qubit computational basis, so the state is kept as a table
    from basis strings to (weight, light state); the branch vector is weight * |light> (x) |key>.
    The pipeline tag records which interferometer produced the light, if any.
    """

    __slots__ = ("__n_qubits", "__branches", "__pipeline")

    def __init__(self, n_qubits: int, branches: Mapping[str, Tuple[complex, DualModeState]], pipeline: Optional[str] = None):

        for key in branches:
            if len(key) != n_qubits or set(key) - {"0", "1"}:
                raise DimensionMismatchException(f"Branch key '{key}' is not a {n_qubits}-bit string")

        self.__n_qubits = n_qubits
        self.__branches: Dict[str, Tuple[complex, DualModeState]] = {k: (complex(w), l) for k, (w, l) in sorted(branches.items())}
        self.__pipeline = pipeline

    @staticmethod
    def from_register(register: QubitState, light: DualModeState, threshold: float = 0.0) -> JointState:
        """
        Couples an arbitrary (possibly entangled) register to a light state that is common to every branch.
        """
        return JointState(register.n_qubits, {key: (value, light) for key, value in register.items(threshold)})

    #================================================================================
    # Properties
    #================================================================================

    @property
    def n_qubits(self) -> int:
        return self.__n_qubits

    @property
    def branches(self) -> Dict[str, Tuple[complex, DualModeState]]:
        return dict(self.__branches)

    @property
    def pipeline(self) -> Optional[str]:
        return self.__pipeline

    def __iter__(self) -> Iterator[Tuple[str, Tuple[complex, DualModeState]]]:
        return iter(self.__branches.items())

    def __len__(self) -> int:
        return len(self.__branches)

    def weight(self, key: str) -> complex:
        return self.__branches[key][0] if key in self.__branches else 0j

    def light(self, key: str) -> Optional[DualModeState]:
        return self.__branches[key][1] if key in self.__branches else None

    def branch_norm2(self, key: str) -> float:
        if key not in self.__branches:
            return 0.0
        weight, light = self.__branches[key]
        return abs(weight) ** 2 * light.norm2()

    def norm2(self) -> float:
        return float(sum(self.branch_norm2(key) for key in self.__branches))

    def check_index(self, qubit: int) -> None:
        if not 0 <= qubit < self.__n_qubits:
            raise QubitIndexException(f"Qubit {qubit} out of range for a {self.__n_qubits}-qubit register")

    #================================================================================
    # Derived states
    #================================================================================

    def map_lights(self, function: Callable[[str, DualModeState], DualModeState], pipeline: Optional[str] = None) -> JointState:
        """
        Applies function(key, light) to every branch light.
        """
        return JointState(self.__n_qubits,
                          {key: (weight, function(key, light)) for key, (weight, light) in self.__branches.items()},
                          pipeline if pipeline is not None else self.__pipeline)

    def scaled(self, factor: complex) -> JointState:
        return JointState(self.__n_qubits, {k: (w * factor, l) for k, (w, l) in self.__branches.items()}, self.__pipeline)

    def normalized(self) -> JointState:
        return self.scaled(1.0 / np.sqrt(self.norm2()))

    def __repr__(self) -> str:
        return "JointState(" + ", ".join(f"{k}: {w:.4g} {l!r}" for k, (w, l) in self.__branches.items()) + ")"
