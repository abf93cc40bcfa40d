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

from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple

import numpy as np

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.exceptions import InvalidStateSpecException


#****************************************************************************************************
# Global Variables
#****************************************************************************************************

# interior amplitudes below this count as rounding noise
EDGE_SUPPORT_TOLERANCE = 1e-12


#****************************************************************************************************
# Dual Mode State
#****************************************************************************************************

class DualModeState:
    """
    Immutable two-mode Fock state.
    Amplitudes are stored per total-photon sector s: sectors[s][l] is the amplitude of |s-l, l>,
    i.e. l counts the photons in mode 1 and s-l the photons in mode 0.
    Operations never mutate a state, they always return a new one.
    """

    __slots__ = ("__sectors", "__cutoff", "__tail_mass")

    def __init__(self, sectors: Mapping[int, np.ndarray], cutoff: Optional[int] = None, tail_mass: float = 0.0):

        frozen = {}
        for s in sorted(sectors):
            amplitudes = np.asarray(sectors[s], dtype=complex)
            if s < 0 or amplitudes.shape != (s + 1,):
                raise InvalidStateSpecException(f"Sector {s} must hold {s + 1} amplitudes, got shape {amplitudes.shape}")
            amplitudes = amplitudes.copy()
            amplitudes.setflags(write=False)
            frozen[int(s)] = amplitudes

        top = max(frozen) if frozen else 0
        if cutoff is None:
            cutoff = top
        if top > cutoff:
            raise InvalidStateSpecException(f"Sector {top} exceeds the cutoff {cutoff}")

        self.__sectors: Dict[int, np.ndarray] = frozen
        self.__cutoff: int = int(cutoff)
        self.__tail_mass: float = float(tail_mass)

    #================================================================================
    # Constructors
    #================================================================================

    @staticmethod
    def vacuum() -> DualModeState:
        return DualModeState({0: np.array([1.0 + 0j])})

    @staticmethod
    def basis(n0: int, n1: int) -> DualModeState:
        s = n0 + n1
        amplitudes = np.zeros(s + 1, dtype=complex)
        amplitudes[n1] = 1.0
        return DualModeState({s: amplitudes})

    @staticmethod
    def from_amplitudes(amplitudes: Mapping[Tuple[int, int], complex], cutoff: Optional[int] = None) -> DualModeState:
        """
        Builds a state from a table keyed by photon-number pairs (n0, n1).
        """
        sectors: Dict[int, np.ndarray] = {}
        for (n0, n1), value in amplitudes.items():
            if n0 < 0 or n1 < 0:
                raise InvalidStateSpecException(f"Negative photon number in key {(n0, n1)}")
            s = n0 + n1
            if s not in sectors:
                sectors[s] = np.zeros(s + 1, dtype=complex)
            sectors[s][n1] += value
        return DualModeState(sectors, cutoff)

    @staticmethod
    def from_dense(matrix: np.ndarray) -> DualModeState:
        """
        Inverse of to_dense: matrix[n0, n1] holds the amplitude of |n0, n1>.
        """
        amplitudes = {}
        for n0, n1 in zip(*np.nonzero(matrix)):
            amplitudes[(int(n0), int(n1))] = matrix[n0, n1]
        return DualModeState.from_amplitudes(amplitudes, cutoff=matrix.shape[0] - 1)

    #================================================================================
    # Properties
    #================================================================================

    @property
    def sectors(self) -> Dict[int, np.ndarray]:
        return dict(self.__sectors)

    @property
    def cutoff(self) -> int:
        return self.__cutoff

    @property
    def tail_mass(self) -> float:
        return self.__tail_mass

    def sector(self, s: int) -> Optional[np.ndarray]:
        return self.__sectors.get(s)

    def amplitude(self, n0: int, n1: int) -> complex:
        amplitudes = self.__sectors.get(n0 + n1)
        if amplitudes is None or n0 < 0 or n1 < 0:
            return 0j
        return complex(amplitudes[n1])

    def items(self, threshold: float = 0.0) -> Iterator[Tuple[Tuple[int, int], complex]]:
        for s, amplitudes in self.__sectors.items():
            for l in np.nonzero(np.abs(amplitudes) > threshold)[0]:
                yield (s - int(l), int(l)), complex(amplitudes[l])

    def norm2(self) -> float:
        return float(sum(np.vdot(a, a).real for a in self.__sectors.values()))

    def is_edge_supported(self) -> bool:
        """
        True when every sector s only populates |s,0> and |0,s>, up to EDGE_SUPPORT_TOLERANCE.
        """
        return all(a.size <= 2 or np.max(np.abs(a[1:-1])) <= EDGE_SUPPORT_TOLERANCE
                   for a in self.__sectors.values())

    def expectation_number(self, mode: int) -> float:
        total = 0.0
        for s, amplitudes in self.__sectors.items():
            counts = self.__counts(s, mode)
            total += float(np.dot(counts, np.abs(amplitudes) ** 2))
        return total

    #================================================================================
    # Derived states
    #================================================================================

    def map_sectors(self, function: Callable[[int, np.ndarray], np.ndarray], tail_mass: Optional[float] = None) -> DualModeState:
        return DualModeState({s: function(s, a) for s, a in self.__sectors.items()},
                             self.__cutoff,
                             self.__tail_mass if tail_mass is None else tail_mass)

    def scaled(self, factor: complex) -> DualModeState:
        return self.map_sectors(lambda s, a: factor * a)

    def normalized(self) -> DualModeState:
        norm2 = self.norm2()
        if norm2 <= 0.0:
            raise InvalidStateSpecException("Cannot normalize a zero state")
        return self.scaled(1.0 / np.sqrt(norm2))

    def added(self, other: DualModeState, factor: complex = 1.0) -> DualModeState:
        sectors = {s: a.copy() for s, a in self.__sectors.items()}
        for s, b in other.sectors.items():
            sectors[s] = sectors[s] + factor * b if s in sectors else factor * b
        return DualModeState(sectors, max(self.__cutoff, other.cutoff), self.__tail_mass + other.tail_mass)

    def project(self, predicate: Callable[[np.ndarray, np.ndarray], np.ndarray]) -> DualModeState:
        """
        Unnormalized projection keeping the amplitudes where predicate(n0, n1) holds.
        """
        def keep(s: int, a: np.ndarray) -> np.ndarray:
            l = np.arange(s + 1)
            return np.where(predicate(s - l, l), a, 0)

        return self.map_sectors(keep)

    def project_count(self, mode: int, n: int) -> DualModeState:
        return self.project(lambda n0, n1: (n0 if mode == 0 else n1) == n)

    def project_difference(self, difference: int) -> DualModeState:
        return self.project(lambda n0, n1: n0 - n1 == difference)

    def project_occupied(self, mode: int, occupied: bool) -> DualModeState:
        return self.project(lambda n0, n1: ((n0 if mode == 0 else n1) > 0) == occupied)

    #================================================================================
    # Distributions
    #================================================================================

    def count_distribution(self, mode: int) -> Dict[int, float]:
        return self.__distribution(lambda s, l: (s - l) if mode == 0 else l)

    def difference_distribution(self) -> Dict[int, float]:
        return self.__distribution(lambda s, l: s - 2 * l)

    def __distribution(self, label: Callable[[int, np.ndarray], np.ndarray]) -> Dict[int, float]:

        if not self.__sectors:
            return {}

        labels = np.concatenate([label(s, np.arange(s + 1)) for s in self.__sectors])
        probabilities = np.concatenate([np.abs(a) ** 2 for a in self.__sectors.values()])
        offset = int(labels.min())
        totals = np.bincount(labels - offset, weights=probabilities)
        return {int(i) + offset: float(p) for i, p in enumerate(totals) if p > 0.0}

    #================================================================================
    # Dense representation
    #================================================================================

    def to_dense(self, cutoff: Optional[int] = None) -> np.ndarray:
        cutoff = self.__cutoff if cutoff is None else cutoff
        matrix = np.zeros((cutoff + 1, cutoff + 1), dtype=complex)
        for (n0, n1), value in self.items():
            matrix[n0, n1] = value
        return matrix

    @staticmethod
    def __counts(s: int, mode: int) -> np.ndarray:
        l = np.arange(s + 1)
        return (s - l) if mode == 0 else l

    def __repr__(self) -> str:
        terms: List[str] = [f"{value:.4g}|{n0},{n1}>" for (n0, n1), value in self.items(1e-6)]
        return f"DualModeState({' + '.join(terms[:8])}{' + ...' if len(terms) > 8 else ''})"
