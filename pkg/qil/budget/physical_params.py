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

import math
import warnings

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.exceptions import ConfigurationException, LossModelException, OffResonanceWarning


#****************************************************************************************************
# Global Variables
#****************************************************************************************************

OFF_RESONANCE_LIMIT = 0.1

# Gamma/Delta = EXACT_RATIO (W/lambda)^2 theta inverts the single-atom phase relation;
# the printed budget numbers use the rounded ratio 8.
EXACT_RATIO = 8.0 * math.pi / 3.0
ROUNDED_RATIO = 8.0


#****************************************************************************************************
# Physics relations
#****************************************************************************************************

def theta_from_physics(waist_ratio: float, detuning_ratio: float) -> float:
    """
    Single-atom phase shift theta = (3 / 8 pi) (lambda / W)^2 (Gamma / Delta).
    """
    if waist_ratio <= 0.0 or detuning_ratio < 0.0:
        raise ConfigurationException(f"waist_ratio must be positive and detuning_ratio non-negative, "
                                     f"got {waist_ratio} and {detuning_ratio}")
    return detuning_ratio / (EXACT_RATIO * waist_ratio ** 2)


def detuning_for_phase(theta: float, waist_ratio: float, rounded: bool = True) -> float:
    """
    Gamma / Delta needed for a phase theta per pass.
    """
    return (ROUNDED_RATIO if rounded else EXACT_RATIO) * waist_ratio ** 2 * theta


#****************************************************************************************************
# Physical Params
#****************************************************************************************************

@dataclass(frozen=True)
class PhysicalParams:
    """
    The experiment's knobs: photon number N, cavity passes M, the per-pass phase theta, and optionally
    the geometry W/lambda and detuning Gamma/Delta it derives from.
    """
    n_photons: float
    theta: float
    cavity_passes: int = field(default=1)
    waist_ratio: Optional[float] = field(default=None)
    detuning_ratio: Optional[float] = field(default=None)

    def __post_init__(self):

        if self.n_photons < 0:
            raise ConfigurationException(f"Photon number must be non-negative, got {self.n_photons}", key="n_photons")
        if self.cavity_passes < 1:
            raise ConfigurationException(f"Cavity passes must be at least 1, got {self.cavity_passes}", key="cavity_passes")
        if not math.isfinite(self.theta) or self.theta < 0.0:
            raise ConfigurationException(f"theta must be a finite non-negative angle, got {self.theta}", key="theta")
        if self.waist_ratio is not None and self.waist_ratio <= 0.0:
            raise ConfigurationException(f"waist_ratio must be positive, got {self.waist_ratio}", key="waist_ratio")
        if self.detuning_ratio is not None:
            if self.detuning_ratio <= 0.0:
                raise ConfigurationException(f"detuning_ratio must be positive, got {self.detuning_ratio}", key="detuning_ratio")
            if self.detuning_ratio >= OFF_RESONANCE_LIMIT:
                warnings.warn(f"Gamma/Delta = {self.detuning_ratio} breaks the off-resonant condition Delta >> Gamma",
                              OffResonanceWarning)

    @staticmethod
    def from_physics(n_photons: float, waist_ratio: float, detuning_ratio: float, cavity_passes: int = 1) -> PhysicalParams:
        return PhysicalParams(n_photons, theta_from_physics(waist_ratio, detuning_ratio), cavity_passes,
                              waist_ratio, detuning_ratio)

    def at_phase(self, theta: float, rounded: bool = True) -> PhysicalParams:
        """
        Same geometry retuned to a new per-pass phase; the detuning follows when the waist is known.
        """
        detuning = detuning_for_phase(theta, self.waist_ratio, rounded) if self.waist_ratio is not None else None
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", OffResonanceWarning)
            return replace(self, theta=theta, detuning_ratio=detuning if detuning else None)

    @property
    def effective_theta(self) -> float:
        """
        Interferometer phase per photon after M passes.
        """
        return self.theta * self.cavity_passes


#****************************************************************************************************
# Loss Model
#****************************************************************************************************

class LossDistribution(Enum):
    POISSON = "poisson"
    GAUSSIAN = "gaussian_approx"


@dataclass(frozen=True)
class LossModel:
    """
    Photons lost between the two qubits, k per arm with mean k_bar.
    """
    mean_lost: float
    distribution: LossDistribution = field(default=LossDistribution.POISSON)
    location: str = field(default="between_qubits")

    def check(self, n_photons: float) -> None:
        if self.mean_lost < 0.0 or self.mean_lost > n_photons:
            raise LossModelException(f"Mean loss k_bar={self.mean_lost} must lie in [0, N={n_photons}]")
        if self.location != "between_qubits":
            raise LossModelException(f"Unsupported loss location '{self.location}'")
