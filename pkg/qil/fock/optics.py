# -*- coding: utf-8 -*-
"""
Created on Monday 10/19/2026
Author: qil developers
Email: qil-dev@example.org

Elementary optical operations on DualModeState values.
The 50/50 beamsplitter is exp[-i(a0+ a1 + a1+ a0) pi/4]; a phase shifter multiplies |n0,n1> by exp(-i theta n_mode).
"""

#****************************************************************************************************
# Imports
#****************************************************************************************************

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# External
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from scipy.linalg import eigh_tridiagonal, expm
from scipy.special import gammaln, xlogy

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.exceptions import InvalidStateSpecException, NoonDomainException
from qil.fock.dual_mode_state import DualModeState


#****************************************************************************************************
# Global Variables
#****************************************************************************************************

NOON_SUPPORT_TOLERANCE = 1e-10

BEAMSPLITTER_MATRIX = np.array([[1.0, -1j], [-1j, 1.0]]) / np.sqrt(2.0)


#****************************************************************************************************
# Sector rotations
#****************************************************************************************************

@lru_cache(maxsize=64)
def _sector_rotation(s: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigen-decomposition of the generator a0+ a1 + a1+ a0 restricted to the sector of s photons.
    The generator is tridiagonal in |s-l, l> with off-diagonal sqrt((s-l)(l+1)) and spectrum -s, -s+2, ..., s.
    :return: (eigenvectors, beamsplitter phases exp(-i pi/4 lambda))
    """

    l = np.arange(s)
    off_diagonal = np.sqrt((s - l) * (l + 1.0))
    eigenvalues, vectors = eigh_tridiagonal(np.zeros(s + 1), off_diagonal)
    phases = np.exp(-0.25j * np.pi * np.rint(eigenvalues))
    vectors.setflags(write=False)
    phases.setflags(write=False)
    return vectors, phases


def _rotate_sector(s: int, amplitudes: np.ndarray) -> np.ndarray:

    if s == 0 or not np.any(amplitudes):
        return amplitudes
    if np.count_nonzero(amplitudes[1:-1]) == 0:
        return _edge_transform(s, amplitudes, BEAMSPLITTER_MATRIX)

    vectors, phases = _sector_rotation(s)
    return vectors @ (phases * (vectors.T @ amplitudes))


def _edge_transform(s: int, amplitudes: np.ndarray, mode_matrix: np.ndarray) -> np.ndarray:
    """
    Closed-form image of a sector supported on |s,0> and |0,s> under a linear mode transform.
    a0+ -> M00 a0+ + M10 a1+ and a1+ -> M01 a0+ + M11 a1+, so (a0+)^s/sqrt(s!) expands binomially:
    |s,0> -> sum_l sqrt(C(s,l)) M00^(s-l) M10^l |s-l,l>.
    """

    l = np.arange(s + 1)
    log_binomial = 0.5 * (gammaln(s + 1) - gammaln(l + 1) - gammaln(s - l + 1))
    result = np.zeros(s + 1, dtype=complex)

    for edge, (upper, lower) in ((0, (mode_matrix[0, 0], mode_matrix[1, 0])),
                                 (s, (mode_matrix[0, 1], mode_matrix[1, 1]))):
        amplitude = amplitudes[edge]
        if amplitude == 0:
            continue
        magnitude = log_binomial + xlogy(s - l, abs(upper)) + xlogy(l, abs(lower))
        phase = (s - l) * np.angle(upper) + l * np.angle(lower)
        result += amplitude * np.exp(magnitude + 1j * phase)

    return result


#****************************************************************************************************
# Operations
#****************************************************************************************************

def apply_beamsplitter(state: DualModeState) -> DualModeState:
    """
    Exact 50/50 beamsplitter, applied sector by sector.
    """
    return state.map_sectors(_rotate_sector)


def apply_phase(state: DualModeState, theta: float, mode: int) -> DualModeState:

    if not np.isfinite(theta):
        raise InvalidStateSpecException(f"Phase must be finite, got {theta}")
    if theta == 0.0:
        return state

    def shift(s: int, amplitudes: np.ndarray) -> np.ndarray:
        l = np.arange(s + 1)
        counts = (s - l) if mode == 0 else l
        return amplitudes * np.exp(-1j * theta * counts)

    return state.map_sectors(shift)


def apply_linear_optics(state: DualModeState, mode_matrix: np.ndarray) -> DualModeState:
    """
    Applies a passive linear transform of the creation operators to a state supported on
    |s,0> and |0,s> in every sector (single-port inputs such as coherent or NOON states).
    """

    if not state.is_edge_supported():
        raise NoonDomainException("Closed-form linear optics needs support on |s,0> and |0,s> only")
    mode_matrix = np.asarray(mode_matrix, dtype=complex)
    return state.map_sectors(lambda s, a: a if s == 0 else _edge_transform(s, a, mode_matrix))


def annihilate(state: DualModeState, mode: int) -> DualModeState:
    """
    Unnormalized a_mode|psi>.
    """

    sectors = {}
    for s, amplitudes in state.sectors.items():
        if s == 0:
            continue
        l = np.arange(s + 1)
        if mode == 0:
            sectors[s - 1] = (np.sqrt(s - l) * amplitudes)[:-1]
        else:
            sectors[s - 1] = (np.sqrt(l) * amplitudes)[1:]

    return DualModeState(sectors, max(state.cutoff - 1, 0), state.tail_mass)


def apply_annihilation(state: DualModeState, mode: int) -> Tuple[Optional[DualModeState], float]:
    """
    Removes one photon from the given mode.
    :return: (renormalized state, <n_mode>) or (None, 0.0) when the mode is empty
    """

    result = annihilate(state, mode)
    norm2 = result.norm2()
    if norm2 == 0.0:
        return None, 0.0
    return result.scaled(1.0 / np.sqrt(norm2)), norm2


def apply_nbs(state: DualModeState) -> DualModeState:
    """
    Nonlinear beamsplitter on the NOON manifold: |s,0> -> (|s,0> + |0,s>)/sqrt(2), |0,s> -> (|s,0> - |0,s>)/sqrt(2).
    The vacuum is a fixed point.
    """

    def rotate(s: int, amplitudes: np.ndarray) -> np.ndarray:

        if s == 0:
            return amplitudes
        if s > 1 and np.max(np.abs(amplitudes[1:-1])) > NOON_SUPPORT_TOLERANCE:
            raise NoonDomainException(f"Sector {s} has support outside span{{|{s},0>, |0,{s}>}}")

        result = np.zeros(s + 1, dtype=complex)
        result[0] = (amplitudes[0] + amplitudes[s]) / np.sqrt(2.0)
        result[s] = (amplitudes[0] - amplitudes[s]) / np.sqrt(2.0)
        return result

    return state.map_sectors(rotate)


def inner_product(a: DualModeState, b: DualModeState) -> complex:
    """
    <a|b> over the union of both supports.
    """

    total = 0j
    b_sectors = b.sectors
    for s, amplitudes in a.sectors.items():
        other = b_sectors.get(s)
        if other is not None:
            total += np.vdot(amplitudes, other)
    return complex(total)


#****************************************************************************************************
# Dense oracle
#****************************************************************************************************

def beamsplitter_oracle(state: DualModeState, cutoff: Optional[int] = None) -> DualModeState:
    """
    Reference beamsplitter by dense matrix exponentiation over the truncated two-mode space.
    Only meant for small cutoffs.
    """

    cutoff = state.cutoff if cutoff is None else cutoff
    dimension = cutoff + 1
    annihilation = np.diag(np.sqrt(np.arange(1, dimension)), k=1)
    identity = np.eye(dimension)
    a0 = np.kron(annihilation, identity)
    a1 = np.kron(identity, annihilation)
    generator = a0.T @ a1 + a1.T @ a0

    unitary = expm(-0.25j * np.pi * generator)
    vector = unitary @ state.to_dense(cutoff).reshape(-1)
    matrix = vector.reshape(dimension, dimension)

    # The truncated product space holds n0 + n1 up to 2 * cutoff; the generator never leaves a sector.
    amplitudes = {(n0, n1): matrix[n0, n1] for n0 in range(dimension) for n1 in range(dimension - n0) if matrix[n0, n1] != 0}
    return DualModeState.from_amplitudes(amplitudes, cutoff)


#****************************************************************************************************
# Coherent overlaps
#****************************************************************************************************

def coherent_overlap(mean_photons: float, theta: float) -> float:
    """
    Exact |<alpha cos(theta) | alpha>|^2 = exp(-N (1 - cos theta)^2) for |alpha|^2 = N.
    """
    return float(np.exp(-mean_photons * (1.0 - np.cos(theta)) ** 2))


def coherent_overlap_series(mean_photons: float, theta: float) -> float:
    """
    Small-angle form 1 - theta^4 N / 8 quoted for the lower-output overlap of distinct branches.
    """
    return 1.0 - theta ** 4 * mean_photons / 8.0
