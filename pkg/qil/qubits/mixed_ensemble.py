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

from typing import Callable, Generic, Iterator, List, Sequence, Tuple, TypeVar

import numpy as np

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.exceptions import DimensionMismatchException, InvalidStateSpecException
from qil.qubits.qubit_state import QubitState
from qil.utils import NORM_TOLERANCE


#****************************************************************************************************
# Mixed Ensemble
#****************************************************************************************************

T = TypeVar("T")


class MixedEnsemble(Generic[T]):
    """
    A weighted list of pure members (QubitState, JointState or DualModeState), representing a mixed state.
    Weights are non-negative and sum to one.
    """

    __slots__ = ("__members",)

    def __init__(self, members: Sequence[Tuple[float, T]], renormalize: bool = False):

        if any(w < -NORM_TOLERANCE for w, _ in members):
            raise InvalidStateSpecException("Ensemble weights must be non-negative")
        members = [(float(w), m) for w, m in members if w > 0.0]

        total = sum(w for w, _ in members)
        if renormalize:
            if total <= 0.0:
                raise InvalidStateSpecException("Cannot renormalize an empty ensemble")
            members = [(w / total, m) for w, m in members]
        elif abs(total - 1.0) > NORM_TOLERANCE:
            raise InvalidStateSpecException(f"Ensemble weights must sum to 1, got {total}")

        self.__members: List[Tuple[float, T]] = members

    @staticmethod
    def pure(member: T) -> MixedEnsemble[T]:
        return MixedEnsemble([(1.0, member)])

    @staticmethod
    def merge(parts: Sequence[Tuple[float, MixedEnsemble[T]]]) -> MixedEnsemble[T]:
        """
        Convex combination of ensembles; the outer weights are renormalized.
        """
        members = [(weight * w, m) for weight, ensemble in parts for w, m in ensemble]
        return MixedEnsemble(members, renormalize=True)

    #================================================================================
    # Access
    #================================================================================

    @property
    def members(self) -> List[Tuple[float, T]]:
        return list(self.__members)

    @property
    def weights(self) -> List[float]:
        return [w for w, _ in self.__members]

    def __iter__(self) -> Iterator[Tuple[float, T]]:
        return iter(self.__members)

    def __len__(self) -> int:
        return len(self.__members)

    def is_pure(self) -> bool:
        return len(self.__members) == 1

    def map(self, function: Callable[[T], T]) -> MixedEnsemble:
        return MixedEnsemble([(w, function(m)) for w, m in self.__members])

    #================================================================================
    # Qubit-only ensembles
    #================================================================================

    @property
    def n_qubits(self) -> int:
        return self.__members[0][1].n_qubits

    def density_matrix(self) -> np.ndarray:
        """
        Density matrix of an ensemble of QubitState members.
        """
        dimensions = {m.vector.shape[0] for _, m in self.__members}
        if len(dimensions) != 1:
            raise DimensionMismatchException("Ensemble members have different qubit counts")
        return sum(w * m.density_matrix() for w, m in self.__members)

    @staticmethod
    def from_density(matrix: np.ndarray, cutoff: float = 1e-14) -> MixedEnsemble[QubitState]:
        """
        Eigen-ensemble of a density matrix, ordered by descending weight.
        Ties are broken by the index of the leading basis component; each member's global phase is fixed.
        Weights below cutoff are dropped and the rest renormalized to the trace.
        """

        matrix = 0.5 * (matrix + matrix.conj().T)
        trace = float(np.trace(matrix).real)
        if trace <= 0.0:
            raise InvalidStateSpecException("Density matrix has no weight")

        eigenvalues, vectors = np.linalg.eigh(matrix / trace)
        members = []
        for value, vector in zip(eigenvalues, vectors.T):
            if value < cutoff:
                continue
            state = QubitState(vector).with_fixed_phase()
            leading = int(np.argmax(np.abs(state.vector) >= np.abs(state.vector).max() - 1e-12))
            members.append((float(value), leading, state))

        members.sort(key=lambda item: (-round(item[0], 12), item[1]))
        return MixedEnsemble([(w, m) for w, _, m in members], renormalize=True)

    def __repr__(self) -> str:
        return "MixedEnsemble(" + ", ".join(f"{w:.4g}: {m!r}" for w, m in self.__members) + ")"
