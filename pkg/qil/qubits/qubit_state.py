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

from dataclasses import dataclass
from functools import reduce
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.exceptions import DimensionMismatchException, InvalidStateSpecException, QubitIndexException
from qil.utils import NORM_TOLERANCE, bits_of


#****************************************************************************************************
# Qubit Amplitudes
#****************************************************************************************************

@dataclass(frozen=True)
class QubitAmplitudes:
    """
    A single qubit chi0 |0> + chi1 |1>.
    """
    chi0: complex
    chi1: complex

    def __post_init__(self):
        norm2 = abs(self.chi0) ** 2 + abs(self.chi1) ** 2
        if abs(norm2 - 1.0) > NORM_TOLERANCE:
            raise InvalidStateSpecException(f"Qubit amplitudes must be normalized, got |chi0|^2+|chi1|^2={norm2}")

    @staticmethod
    def normalize(chi0: complex, chi1: complex) -> QubitAmplitudes:
        norm = np.sqrt(abs(chi0) ** 2 + abs(chi1) ** 2)
        if norm == 0.0:
            raise InvalidStateSpecException("Qubit amplitudes cannot both vanish")
        return QubitAmplitudes(complex(chi0 / norm), complex(chi1 / norm))

    @staticmethod
    def plus() -> QubitAmplitudes:
        return QubitAmplitudes(1 / np.sqrt(2.0), 1 / np.sqrt(2.0))

    @staticmethod
    def random(rng: np.random.Generator) -> QubitAmplitudes:
        values = rng.normal(size=2) + 1j * rng.normal(size=2)
        return QubitAmplitudes.normalize(values[0], values[1])

    def __getitem__(self, bit: int) -> complex:
        return self.chi0 if bit == 0 else self.chi1

    def as_vector(self) -> np.ndarray:
        return np.array([self.chi0, self.chi1], dtype=complex)


#****************************************************************************************************
# Qubit State
#****************************************************************************************************

class QubitState:
    """
    Pure state of an n-qubit register, stored as 2^n amplitudes.
    Qubit 0 is the most significant bit of the basis index, so basis string "01" means qubit 0 in |0>.
    """

    __slots__ = ("__vector", "__n_qubits")

    def __init__(self, vector: Sequence[complex], normalize: bool = False):

        vector = np.array(vector, dtype=complex)
        n_qubits = int(np.log2(len(vector))) if len(vector) > 0 else 0
        if len(vector) < 2 or 2 ** n_qubits != len(vector):
            raise DimensionMismatchException(f"A register needs 2^n amplitudes with n >= 1, got {len(vector)}")

        if normalize:
            norm = np.linalg.norm(vector)
            if norm == 0.0:
                raise InvalidStateSpecException("Cannot normalize a zero register")
            vector = vector / norm

        vector.setflags(write=False)
        self.__vector = vector
        self.__n_qubits = n_qubits

    #================================================================================
    # Constructors
    #================================================================================

    @staticmethod
    def product(qubits: Iterable[QubitAmplitudes]) -> QubitState:
        return QubitState(reduce(np.kron, [q.as_vector() for q in qubits]))

    @staticmethod
    def from_basis(amplitudes: Dict[str, complex], normalize: bool = True) -> QubitState:
        """
        Builds a register from a table such as {"01": 1, "10": 1}.
        """
        n_qubits = len(next(iter(amplitudes)))
        vector = np.zeros(2 ** n_qubits, dtype=complex)
        for key, value in amplitudes.items():
            if len(key) != n_qubits:
                raise DimensionMismatchException(f"Basis string '{key}' does not have {n_qubits} bits")
            vector[int(key, 2)] += value
        return QubitState(vector, normalize)

    #================================================================================
    # Properties
    #================================================================================

    @property
    def vector(self) -> np.ndarray:
        return self.__vector

    @property
    def n_qubits(self) -> int:
        return self.__n_qubits

    def amplitude(self, key: str) -> complex:
        return complex(self.__vector[int(key, 2)])

    def items(self, threshold: float = 0.0) -> List[Tuple[str, complex]]:
        return [(bits_of(i, self.__n_qubits), complex(v)) for i, v in enumerate(self.__vector) if abs(v) > threshold]

    def norm2(self) -> float:
        return float(np.vdot(self.__vector, self.__vector).real)

    def overlap(self, other: QubitState) -> complex:
        if other.n_qubits != self.__n_qubits:
            raise DimensionMismatchException(f"Cannot compare {self.__n_qubits} and {other.n_qubits} qubits")
        return complex(np.vdot(self.__vector, other.vector))

    def density_matrix(self) -> np.ndarray:
        return np.outer(self.__vector, self.__vector.conj())

    #================================================================================
    # Operations
    #================================================================================

    def check_index(self, qubit: int) -> None:
        if not 0 <= qubit < self.__n_qubits:
            raise QubitIndexException(f"Qubit {qubit} out of range for a {self.__n_qubits}-qubit register")

    def apply_single(self, qubit: int, matrix: np.ndarray) -> QubitState:
        """
        Applies a 2x2 operator to one qubit.
        """
        self.check_index(qubit)
        tensor = self.__vector.reshape([2] * self.__n_qubits)
        tensor = np.moveaxis(np.tensordot(matrix, tensor, axes=([1], [qubit])), 0, qubit)
        return QubitState(tensor.reshape(-1))

    def with_phase(self, qubit: int, bit: int, phase: float) -> QubitState:
        matrix = np.eye(2, dtype=complex)
        matrix[bit, bit] = np.exp(1j * phase)
        return self.apply_single(qubit, matrix)

    def project(self, qubit: int, bit: int) -> QubitState:
        """
        Unnormalized projection of one qubit onto |bit>.
        """
        matrix = np.zeros((2, 2), dtype=complex)
        matrix[bit, bit] = 1.0
        return self.apply_single(qubit, matrix)

    def scaled(self, factor: complex) -> QubitState:
        return QubitState(self.__vector * factor)

    def normalized(self) -> QubitState:
        return QubitState(self.__vector, normalize=True)

    def with_fixed_phase(self) -> QubitState:
        """
        Removes the global phase so that the first largest-magnitude amplitude is real and positive.
        """
        magnitudes = np.abs(self.__vector)
        index = int(np.argmax(magnitudes >= magnitudes.max() - 1e-12))
        if magnitudes[index] == 0.0:
            return self
        return QubitState(self.__vector * np.exp(-1j * np.angle(self.__vector[index])))

    def reduced_density(self, keep: Sequence[int]) -> np.ndarray:
        """
        Reduced density matrix of the qubits in keep, ordered as given.
        """
        for qubit in keep:
            self.check_index(qubit)
        traced = [q for q in range(self.__n_qubits) if q not in keep]
        tensor = np.moveaxis(self.__vector.reshape([2] * self.__n_qubits), list(keep) + traced, range(self.__n_qubits))
        matrix = tensor.reshape(2 ** len(keep), -1)
        return matrix @ matrix.conj().T

    def __repr__(self) -> str:
        return "QubitState(" + " + ".join(f"{v:.4g}|{k}>" for k, v in self.items(1e-9)) + ")"
