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
from typing import Optional, Tuple

import numpy as np

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.budget.physical_params import LossDistribution, LossModel, PhysicalParams
from qil.exceptions import ConfigurationException
from qil.interferometer.error_rates import find_first_zero, theta_for_error
from qil.interferometer.outcome_record import Scheme
from qil.protocols.protocol_config import ErrorInjection, ExecutionMode, ProtocolConfig
from qil.qubits.qubit_state import QubitAmplitudes


#****************************************************************************************************
# Global Variables
#****************************************************************************************************

QUANTITIES = ("epsilon", "eta", "kappa", "eta_loss")
FORMATS = ("csv", "json")
DEFAULT_WAIST_RATIO = 3.0


#****************************************************************************************************
# Run Config
#****************************************************************************************************

@dataclass(frozen=True)
class RunConfig:
    """
    A validated run configuration, merged from a key=value file and command-line flags.
    theta is the per-pass phase; it excludes a detuning, from which theta would otherwise follow.
    """
    scheme: Optional[Scheme] = field(default=None)
    n_photons: Optional[float] = field(default=None)
    cavity_passes: int = field(default=1)
    waist_ratio: Optional[float] = field(default=None)
    detuning_ratio: Optional[float] = field(default=None)
    theta: Optional[float] = field(default=None)
    seed: Optional[int] = field(default=None)
    mode: ExecutionMode = field(default=ExecutionMode.EXACT)
    out: Optional[str] = field(default=None)
    format: Optional[str] = field(default=None)
    grid: Optional[Tuple[float, ...]] = field(default=None)
    quantities: Tuple[str, ...] = field(default=QUANTITIES)
    chi_x: Optional[QubitAmplitudes] = field(default=None)
    chi_y: Optional[QubitAmplitudes] = field(default=None)
    trials: int = field(default=1)
    n_qubits: int = field(default=3)
    c00: complex = field(default=complex(np.sqrt(0.5)))
    c11: complex = field(default=complex(np.sqrt(0.5)))
    fidelity_target: Optional[float] = field(default=None)
    target_error: Optional[float] = field(default=None)
    loss_mean: Optional[float] = field(default=None)
    loss_distribution: LossDistribution = field(default=LossDistribution.POISSON)
    single_loss: bool = field(default=False)

    def __post_init__(self):

        if self.theta is not None and self.detuning_ratio is not None:
            raise ConfigurationException("theta and detuning_ratio are mutually exclusive", key="theta")
        if self.detuning_ratio is not None and self.waist_ratio is None:
            raise ConfigurationException("detuning_ratio needs waist_ratio", key="detuning_ratio")
        if self.n_photons is not None and self.n_photons <= 0:
            raise ConfigurationException(f"n_photons must be positive, got {self.n_photons}", key="n_photons")
        if self.cavity_passes < 1:
            raise ConfigurationException(f"cavity_passes must be at least 1, got {self.cavity_passes}", key="cavity_passes")
        if self.format is not None and self.format not in FORMATS:
            raise ConfigurationException(f"format must be one of {', '.join(FORMATS)}, got '{self.format}'", key="format")
        if self.trials < 1:
            raise ConfigurationException(f"trials must be at least 1, got {self.trials}", key="trials")
        if self.n_qubits < 2:
            raise ConfigurationException(f"n_qubits must be at least 2, got {self.n_qubits}", key="n_qubits")
        if self.fidelity_target is not None and not 0.0 < self.fidelity_target < 1.0:
            raise ConfigurationException(f"fidelity_target must lie in (0, 1), got {self.fidelity_target}",
                                         key="fidelity_target")
        unknown = set(self.quantities) - set(QUANTITIES)
        if unknown or not self.quantities:
            raise ConfigurationException(f"quantities must be a non-empty subset of {', '.join(QUANTITIES)}",
                                         key="quantities")

    #================================================================================
    # Requirements
    #================================================================================

    def require_scheme(self) -> Scheme:
        if self.scheme is None:
            raise ConfigurationException("A scheme is required", key="scheme")
        return self.scheme

    def require_photons(self) -> float:
        if self.n_photons is None:
            raise ConfigurationException("A photon number is required", key="n_photons")
        return self.n_photons

    #================================================================================
    # Conversions
    #================================================================================

    def physical_params(self) -> PhysicalParams:
        """
        The physical knobs; without theta or a detuning the phase defaults to the first zero of the
        scheme's false-null rate (tf, noon), spread over the cavity passes. The coherent scheme takes it
        from the target error instead.
        """

        scheme, n_photons = self.require_scheme(), self.require_photons()
        if self.detuning_ratio is not None:
            return PhysicalParams.from_physics(n_photons, self.waist_ratio, self.detuning_ratio, self.cavity_passes)

        theta = self.theta
        if theta is None:
            if scheme == Scheme.COHERENT:
                if self.target_error is None:
                    raise ConfigurationException("The coherent scheme needs theta, a detuning or a target error",
                                                 key="theta")
                theta = theta_for_error(scheme, n_photons, self.target_error) / self.cavity_passes
            elif not float(n_photons).is_integer():
                raise ConfigurationException(f"{scheme.value} needs an integer photon number", key="n_photons")
            else:
                theta = find_first_zero(int(n_photons), scheme) / self.cavity_passes

        return PhysicalParams(n_photons, theta, self.cavity_passes, self.waist_ratio)

    def protocol_config(self) -> ProtocolConfig:

        loss = LossModel(self.loss_mean, self.loss_distribution) if self.loss_mean is not None else None
        injection = ErrorInjection(self.target_error, loss, self.single_loss)
        seed = self.seed if self.mode == ExecutionMode.SAMPLED else None
        return ProtocolConfig(self.require_scheme(), self.physical_params(), self.mode, seed, injection)
