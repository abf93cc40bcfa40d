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

from scipy.special import gammaln
from scipy.stats import poisson

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.auto_printer import AutoPrinter
from qil.exceptions import TailToleranceException
from qil.fock.dual_mode_state import DualModeState
from qil.fock.state_spec import StateKind, StateSpec


#****************************************************************************************************
# Global Variables
#****************************************************************************************************

DEFAULT_TAIL_TOLERANCE = 1e-12
MAX_TAIL_TOLERANCE = 1e-6


#****************************************************************************************************
# State Factory
#****************************************************************************************************

class StateFactory(AutoPrinter):
    """
    A factory class turning a StateSpec into a normalized DualModeState.
    """

    def make_state(self, spec: StateSpec, tail_tolerance: float = DEFAULT_TAIL_TOLERANCE) -> DualModeState:
        """
        Builds the state described by spec.
        For coherent kinds the photon-number sectors kept are the smallest window whose discarded
        Poisson mass is below tail_tolerance; the discarded mass is recorded on the state.
        :param spec: the state specification
        :param tail_tolerance: bound on the discarded probability, in (0, 1e-6]
        :return: a normalized DualModeState
        """

        if not 0.0 < tail_tolerance <= MAX_TAIL_TOLERANCE:
            raise TailToleranceException(f"Tail tolerance must lie in (0, {MAX_TAIL_TOLERANCE}], got {tail_tolerance}")

        if spec.kind == StateKind.FOCK:
            return DualModeState.basis(spec.k, spec.l)

        if spec.kind == StateKind.TWIN_FOCK:
            return DualModeState.basis(spec.n, spec.n)

        if spec.kind == StateKind.NOON:
            return self.__noon(spec.n, spec.phi)

        if spec.kind == StateKind.COHERENT:
            return self.__coherent(spec.alpha, spec.port, tail_tolerance)

        return self.__coherent_noon(spec.alpha, tail_tolerance)

    #================================================================================
    # Builders
    #================================================================================

    @staticmethod
    def __noon(n: int, phi: float) -> DualModeState:

        if n == 0:
            return DualModeState.vacuum()

        amplitudes = np.zeros(n + 1, dtype=complex)
        amplitudes[0] = 1.0 / np.sqrt(2.0)
        amplitudes[n] = np.exp(1j * phi) / np.sqrt(2.0)
        return DualModeState({n: amplitudes})

    @staticmethod
    def poisson_window(mean: float, tail_tolerance: float) -> Tuple[int, int, float]:
        """
        Smallest sector window [s_lo, s_hi] leaving less than tail_tolerance / 2 Poisson mass on each side.
        :return: (s_lo, s_hi, discarded mass)
        """

        if mean == 0.0:
            return 0, 0, 0.0

        half = tail_tolerance / 2.0
        s_lo = int(poisson.ppf(half, mean))
        while s_lo > 0 and poisson.cdf(s_lo - 1, mean) >= half:
            s_lo -= 1
        s_hi = int(poisson.isf(half, mean))
        while poisson.sf(s_hi, mean) >= half:
            s_hi += 1

        discarded = (poisson.cdf(s_lo - 1, mean) if s_lo > 0 else 0.0) + poisson.sf(s_hi, mean)
        return s_lo, s_hi, float(discarded)

    def __coherent_amplitudes(self, alpha: complex, tail_tolerance: float) -> Tuple[Dict[int, complex], float]:

        mean = abs(alpha) ** 2
        s_lo, s_hi, discarded = self.poisson_window(mean, tail_tolerance)
        self.print(f"|alpha|^2={mean:.6g}: keeping sectors [{s_lo}, {s_hi}], discarded mass {discarded:.3g}")

        if mean == 0.0:
            return {0: 1.0 + 0j}, 0.0

        s = np.arange(s_lo, s_hi + 1)
        log_magnitude = -mean / 2.0 + s * np.log(abs(alpha)) - 0.5 * gammaln(s + 1)
        values = np.exp(log_magnitude + 1j * s * np.angle(alpha))
        return dict(zip(s.tolist(), values)), discarded

    def __coherent(self, alpha: complex, port: int, tail_tolerance: float) -> DualModeState:

        coefficients, discarded = self.__coherent_amplitudes(alpha, tail_tolerance)
        sectors = {}
        for s, value in coefficients.items():
            amplitudes = np.zeros(s + 1, dtype=complex)
            amplitudes[0 if port == 0 else s] = value
            sectors[s] = amplitudes

        return DualModeState(sectors, max(sectors), discarded).normalized()

    def __coherent_noon(self, alpha: complex, tail_tolerance: float) -> DualModeState:
        """
        (|alpha>|0> + |0>|alpha>) normalized; the two branches share the vacuum, which is counted twice.
        """

        coefficients, discarded = self.__coherent_amplitudes(alpha, tail_tolerance)
        sectors = {}
        for s, value in coefficients.items():
            amplitudes = np.zeros(s + 1, dtype=complex)
            amplitudes[0] += value
            amplitudes[s] += value
            sectors[s] = amplitudes

        return DualModeState(sectors, max(sectors), discarded).normalized()


#****************************************************************************************************
# Convenience
#****************************************************************************************************

def make_state(spec: StateSpec, tail_tolerance: float = DEFAULT_TAIL_TOLERANCE) -> DualModeState:
    return StateFactory().make_state(spec, tail_tolerance)
