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

import cmath
import math

from dataclasses import dataclass, field
from enum import Enum
from numbers import Integral

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.exceptions import InvalidStateSpecException


#****************************************************************************************************
# State Spec
#****************************************************************************************************

class StateKind(Enum):
    FOCK = "fock"
    COHERENT = "coherent"
    TWIN_FOCK = "twin_fock"
    NOON = "noon"
    COHERENT_NOON = "coherent_noon"


def _check_count(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise InvalidStateSpecException(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise InvalidStateSpecException(f"{name} must be non-negative, got {value}")
    return int(value)


@dataclass(frozen=True)
class StateSpec:
    """
    Description of an input light state. Use the static constructors rather than the raw fields.
    """
    kind: StateKind
    k: int = field(default=0)
    l: int = field(default=0)
    alpha: complex = field(default=0j)
    port: int = field(default=0)
    phi: float = field(default=0.0)

    def __post_init__(self):

        _check_count("k", self.k)
        _check_count("l", self.l)

        if not cmath.isfinite(complex(self.alpha)):
            raise InvalidStateSpecException(f"alpha must be finite, got {self.alpha!r}")
        if self.port not in (0, 1):
            raise InvalidStateSpecException(f"port must be 0 or 1, got {self.port!r}")
        if not math.isfinite(self.phi):
            raise InvalidStateSpecException(f"phi must be a finite real, got {self.phi!r}")

    @property
    def n(self) -> int:
        return self.k

    @property
    def mean_photons(self) -> float:
        if self.kind == StateKind.FOCK:
            return float(self.k + self.l)
        if self.kind == StateKind.TWIN_FOCK:
            return 2.0 * self.k
        if self.kind == StateKind.NOON:
            return float(self.k)
        return abs(complex(self.alpha)) ** 2

    #================================================================================
    # Constructors
    #================================================================================

    @staticmethod
    def fock(k: int, l: int) -> StateSpec:
        return StateSpec(StateKind.FOCK, k=k, l=l)

    @staticmethod
    def coherent(alpha: complex, port: int = 0) -> StateSpec:
        return StateSpec(StateKind.COHERENT, alpha=complex(alpha), port=port)

    @staticmethod
    def twin_fock(n: int) -> StateSpec:
        return StateSpec(StateKind.TWIN_FOCK, k=n)

    @staticmethod
    def noon(n: int, phi: float = 0.0) -> StateSpec:
        return StateSpec(StateKind.NOON, k=n, phi=phi)

    @staticmethod
    def coherent_noon(alpha: complex) -> StateSpec:
        return StateSpec(StateKind.COHERENT_NOON, alpha=complex(alpha))
