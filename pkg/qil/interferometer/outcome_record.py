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
from enum import Enum

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.exceptions import ConfigurationException
from qil.qubits.mixed_ensemble import MixedEnsemble


#****************************************************************************************************
# Enums
#****************************************************************************************************

class Measurement(Enum):
    COHERENT_COUNT = "coherent_count"
    TF_NUMBER_DIFFERENCE = "tf_number_difference"
    NOON_PRESENCE = "noon_presence"

    @property
    def pipeline(self) -> str:
        return "noon" if self == Measurement.NOON_PRESENCE else "mz"


class Scheme(Enum):
    COHERENT = "coherent"
    TF = "tf"
    NOON = "noon"

    @property
    def measurement(self) -> Measurement:
        return {Scheme.COHERENT: Measurement.COHERENT_COUNT,
                Scheme.TF: Measurement.TF_NUMBER_DIFFERENCE,
                Scheme.NOON: Measurement.NOON_PRESENCE}[self]

    @staticmethod
    def parse(text: str) -> Scheme:
        try:
            return Scheme(text.strip().lower())
        except ValueError:
            raise ConfigurationException(f"Unknown scheme '{text}', expected one of coherent, tf, noon", key="scheme")


class Subspace(Enum):
    BALANCED = "balanced"
    IMBALANCED = "imbalanced"


#****************************************************************************************************
# Outcome Record
#****************************************************************************************************

@dataclass(frozen=True)
class OutcomeRecord:
    """
    One measurement outcome: the photon count in the upper port, the number difference n0 - n1,
    or the presence bit of the lower port (1 when occupied).
    The posterior is the qubit state with the light measured out.
    """
    measurement: Measurement
    value: int
    probability: float
    posterior: MixedEnsemble
    subspace: Subspace

    @property
    def is_null(self) -> bool:
        return self.subspace == Subspace.BALANCED
