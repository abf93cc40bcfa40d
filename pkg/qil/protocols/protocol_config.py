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

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple, Union

import numpy as np

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.budget.physical_params import LossModel, PhysicalParams
from qil.exceptions import ConfigurationException
from qil.fock.state_factory import DEFAULT_TAIL_TOLERANCE
from qil.interferometer.outcome_record import Scheme
from qil.qubits.mixed_ensemble import MixedEnsemble
from qil.qubits.qubit_state import QubitState


#****************************************************************************************************
# Configuration
#****************************************************************************************************

class ExecutionMode(Enum):
    EXACT = "exact"
    SAMPLED = "sampled"


@dataclass(frozen=True)
class ErrorInjection:
    """
    Deliberate imperfections: a target false-null rate the phase is retuned to, a photon loss model
    between the qubits for the coherent scheme, or a single lost photon for the twin-Fock and NOON schemes.
    """
    err: Optional[float] = field(default=None)
    loss: Optional[LossModel] = field(default=None)
    single_loss: bool = field(default=False)

    def __post_init__(self):
        if self.err is not None and not 0.0 <= self.err <= 1.0:
            raise ConfigurationException(f"Injected error must lie in [0, 1], got {self.err}", key="target_error")


@dataclass(frozen=True)
class ProtocolConfig:
    scheme: Scheme
    params: PhysicalParams
    mode: ExecutionMode = field(default=ExecutionMode.EXACT)
    seed: Optional[int] = field(default=None)
    error_injection: ErrorInjection = field(default_factory=ErrorInjection)
    tail_tolerance: float = field(default=DEFAULT_TAIL_TOLERANCE)

    def __post_init__(self):

        if (self.mode == ExecutionMode.SAMPLED) != (self.seed is not None):
            raise ConfigurationException("A seed is required in sampled mode and only there", key="seed")
        if self.scheme != Scheme.COHERENT:
            if not float(self.params.n_photons).is_integer() or self.params.n_photons < 1:
                raise ConfigurationException(f"{self.scheme.value} needs a positive integer photon number, "
                                             f"got {self.params.n_photons}", key="n_photons")
            if self.error_injection.loss is not None:
                raise ConfigurationException("A loss model only applies to the coherent scheme", key="loss")
        elif self.error_injection.single_loss:
            raise ConfigurationException("Single-photon loss only applies to the tf and noon schemes", key="loss")

    @property
    def sampled(self) -> bool:
        return self.mode == ExecutionMode.SAMPLED

    def rng(self) -> Optional[np.random.Generator]:
        return np.random.default_rng(self.seed) if self.sampled else None


#****************************************************************************************************
# Results
#****************************************************************************************************

@dataclass(frozen=True)
class TranscriptEntry:
    """
    One step of a protocol run. outcome is None for deterministic operations.
    """
    operation: str
    qubits: Tuple[int, ...]
    outcome: Optional[int] = field(default=None)
    probability: float = field(default=1.0)


@dataclass(frozen=True)
class BranchResult:
    probability: float
    state: Union[QubitState, MixedEnsemble]
    fidelity: float
    transcript: Tuple[TranscriptEntry, ...]


@dataclass(frozen=True)
class ProtocolResult:
    """
    Outcome of a protocol: every measurement branch in exact mode, the single drawn branch when sampled.
    fidelity_vs_ideal is the probability-weighted mean over branches.
    """
    kind: str
    branches: Tuple[BranchResult, ...]

    @property
    def final_state(self) -> Union[QubitState, MixedEnsemble]:
        if len(self.branches) == 1:
            return self.branches[0].state
        return MixedEnsemble.merge([(b.probability, _as_ensemble(b.state)) for b in self.branches])

    @property
    def fidelity_vs_ideal(self) -> float:
        total = sum(b.probability for b in self.branches)
        return float(sum(b.probability * b.fidelity for b in self.branches) / total)

    @property
    def min_fidelity(self) -> float:
        return float(min(b.fidelity for b in self.branches))

    @property
    def transcript(self) -> List[TranscriptEntry]:
        return [entry for branch in self.branches for entry in branch.transcript]


def _as_ensemble(state: Union[QubitState, MixedEnsemble]) -> MixedEnsemble:
    return state if isinstance(state, MixedEnsemble) else MixedEnsemble.pure(state)
