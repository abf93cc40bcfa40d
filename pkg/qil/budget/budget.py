# -*- coding: utf-8 -*-
"""
Created on Monday 10/19/2026
Author: qil developers
Email: qil-dev@example.org

Spontaneous-emission, cavity and loss budgets, and the fidelity limits they imply.
Every closed form is evaluated with exact coefficients; the rounded published values are kept
next to them as constants so both can be reported.
"""

#****************************************************************************************************
# Imports
#****************************************************************************************************

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# External
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from __future__ import annotations

import math

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

import numpy as np

from scipy.optimize import brentq

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.auto_printer import AutoPrinter
from qil.budget.physical_params import EXACT_RATIO, ROUNDED_RATIO, PhysicalParams, detuning_for_phase
from qil.exceptions import ConfigurationException, FormulaDomainException, RegimeViolationException
from qil.interferometer.error_rates import eta, find_first_zero, fit_quadratic_coefficient, kappa, x1_asymptotic
from qil.interferometer.outcome_record import Scheme

def print(msg): AutoPrinter.static_print(msg)


#****************************************************************************************************
# Global Variables
#****************************************************************************************************

EXACT_ZERO_MAX_N = 1024

QUOTED_X1 = 1.196
QUOTED_TF_BUDGET = 200.0
QUOTED_NOON_BUDGET = 350.0
QUOTED_TF_QUADRATIC = 1.3
QUOTED_NOON_QUADRATIC = 1.0
QUOTED_TF_WINDOW = 9.5
QUOTED_NOON_WINDOW = 8.1
QUOTED_ETA_LOSS_COEFFICIENT = 0.33
QUOTED_ONE_LOSS_COEFFICIENT = 2.6
QUOTED_PASSES = 6.6e5
QUOTED_REFERENCE_POINT = (0.01, 3.0)


class LimitScheme(Enum):
    COHERENT_CAVITY = "coherent_cavity"
    TF = "tf"
    TF_ONE_LOSS = "tf_one_loss"
    NOON = "noon"


#****************************************************************************************************
# Spontaneous emission
#****************************************************************************************************

def p_spontaneous(params: PhysicalParams, strict: bool = False, rounded: bool = True) -> float:
    """
    P_sp = 2 N M theta (Gamma / Delta) for two qubits.
    When no detuning is given it follows from the waist and theta.
    """

    detuning = params.detuning_ratio
    if detuning is None:
        if params.waist_ratio is None:
            raise ConfigurationException("P_sp needs detuning_ratio or waist_ratio", key="detuning_ratio")
        detuning = detuning_for_phase(params.theta, params.waist_ratio, rounded)

    value = 2.0 * params.n_photons * params.cavity_passes * params.theta * detuning
    if strict and value > 1.0:
        raise RegimeViolationException(f"P_sp = {value:.6g} exceeds 1")
    return float(value)


@lru_cache(maxsize=32)
def first_zero_scaled(n_photons: float) -> float:
    """
    x1(N) = N theta at the first twin-Fock zero: exact for N up to EXACT_ZERO_MAX_N, asymptotic beyond.
    """
    if float(n_photons).is_integer() and 1 <= n_photons <= EXACT_ZERO_MAX_N:
        return find_first_zero(int(n_photons), Scheme.TF) * n_photons
    return x1_asymptotic(n_photons)


def spontaneous_at_phase(scaled_phase: float, n_photons: float, cavity_passes: int, waist_ratio: float,
                         rounded: bool = True) -> float:
    """
    P_sp when the per-pass phase is tuned so that N M theta equals scaled_phase:
    2 (Gamma/Delta ratio) (W/lambda)^2 scaled_phase^2 / (N M).
    """
    ratio = ROUNDED_RATIO if rounded else EXACT_RATIO
    return 2.0 * ratio * waist_ratio ** 2 * scaled_phase ** 2 / (n_photons * cavity_passes)


#****************************************************************************************************
# Cavity budget
#****************************************************************************************************

def cavity_passes_for_targets(epsilon_target: float, waist_ratio: float) -> float:
    """
    M = -16 (W/lambda)^2 ln(eps) / eps: the passes at which P_sp equals the coherent false-null target.
    """
    if not 0.0 < epsilon_target < 1.0:
        raise FormulaDomainException(f"epsilon target must lie in (0, 1), got {epsilon_target}")
    return float(-2.0 * ROUNDED_RATIO * waist_ratio ** 2 * math.log(epsilon_target) / epsilon_target)


def epsilon_for_passes(cavity_passes: float, waist_ratio: float) -> float:
    """
    Inverse of cavity_passes_for_targets.
    """
    return float(brentq(lambda e: cavity_passes_for_targets(e, waist_ratio) - cavity_passes, 1e-300, 1.0 - 1e-16))


@dataclass(frozen=True)
class CavityBudget:
    epsilon: float
    waist_ratio: float
    passes_required: float
    passes_quoted: Optional[float]
    mean_detected_photons: float


def cavity_budget(epsilon_target: float, waist_ratio: float) -> CavityBudget:
    """
    Cavity passes for a coherent-scheme target, with the published figure attached at its reference point
    and the mean upper-port photon number -ln(eps) at the null threshold.
    """
    quoted = QUOTED_PASSES if (epsilon_target, waist_ratio) == QUOTED_REFERENCE_POINT else None
    return CavityBudget(epsilon_target, waist_ratio, cavity_passes_for_targets(epsilon_target, waist_ratio),
                        quoted, -math.log(epsilon_target))


#****************************************************************************************************
# Loss budget
#****************************************************************************************************

def kbar_for_fidelity(f_loss_target: float, epsilon_target: float, n_photons: float) -> float:
    """
    k_bar = N ln(2 f_loss - 1) / ln(eps): mean photons that may be lost per arm for a loss fidelity target.
    """
    if not 0.5 < f_loss_target <= 1.0:
        raise FormulaDomainException(f"f_loss target must lie in (1/2, 1], got {f_loss_target}")
    if not 0.0 < epsilon_target < 1.0:
        raise FormulaDomainException(f"epsilon must lie in (0, 1), got {epsilon_target}")
    return float(n_photons * math.log(2.0 * f_loss_target - 1.0) / math.log(epsilon_target))


def one_loss_coefficient(waist_ratio: float, eta_loss_coefficient: float = QUOTED_ETA_LOSS_COEFFICIENT,
                         rounded: bool = False) -> float:
    """
    K in 1 - K / N^(1/3): the single-loss false-null envelope c / (N theta) set equal to P_sp.
    """
    ratio = ROUNDED_RATIO if rounded else EXACT_RATIO
    return float(eta_loss_coefficient ** (2.0 / 3.0) * (2.0 * ratio * waist_ratio ** 2) ** (1.0 / 3.0))


def one_loss_phase(n_photons: float, cavity_passes: int = 1, waist_ratio: float = 3.0,
                   eta_loss_coefficient: float = QUOTED_ETA_LOSS_COEFFICIENT) -> float:
    """
    N M theta at which the single-loss envelope c / (N M theta) equals P_sp.
    """
    return float((eta_loss_coefficient * n_photons * cavity_passes / (2.0 * EXACT_RATIO * waist_ratio ** 2)) ** (1.0 / 3.0))


#****************************************************************************************************
# Fidelity limits
#****************************************************************************************************

def fidelity_limit(scheme: LimitScheme, n_photons: float, cavity_passes: int = 1, waist_ratio: float = 3.0,
                   strict: bool = True) -> float:
    """
    Fidelity ceiling of a scheme once the interferometer is tuned to its best phase.
    The cavity enters as N -> M N.
    """

    if n_photons <= 0 or cavity_passes < 1:
        raise FormulaDomainException(f"N must be positive and M at least 1, got N={n_photons}, M={cavity_passes}")

    if scheme == LimitScheme.TF:
        error = spontaneous_at_phase(first_zero_scaled(n_photons), n_photons, cavity_passes, waist_ratio)
    elif scheme == LimitScheme.NOON:
        error = spontaneous_at_phase(np.pi / 2.0, n_photons, cavity_passes, waist_ratio)
    elif scheme == LimitScheme.TF_ONE_LOSS:
        error = one_loss_coefficient(waist_ratio) / (n_photons * cavity_passes) ** (1.0 / 3.0)
    else:
        error = epsilon_for_passes(cavity_passes, waist_ratio)

    if error > 1.0 and strict:
        raise RegimeViolationException(f"{scheme.value}: error budget {error:.6g} exceeds 1")
    return float(1.0 - error)


def n_for_fidelity(scheme: LimitScheme, fidelity_target: float, cavity_passes: int = 1, waist_ratio: float = 3.0) -> float:
    """
    Photon number at which a scheme's fidelity limit reaches the target.
    """

    if not 0.0 < fidelity_target < 1.0:
        raise FormulaDomainException(f"Fidelity target must lie in (0, 1), got {fidelity_target}")
    budget = 1.0 - fidelity_target

    if scheme == LimitScheme.NOON:
        return spontaneous_at_phase(np.pi / 2.0, 1.0, cavity_passes, waist_ratio) / budget
    if scheme == LimitScheme.TF_ONE_LOSS:
        return (one_loss_coefficient(waist_ratio) / budget) ** 3 / cavity_passes
    if scheme == LimitScheme.TF:
        def residual(n: float) -> float:
            return spontaneous_at_phase(x1_asymptotic(n), n, cavity_passes, waist_ratio) - budget
        return float(brentq(residual, 1e-3, 1e15))

    raise FormulaDomainException("The coherent cavity limit does not depend on N")


#****************************************************************************************************
# Sensitivity window
#****************************************************************************************************

@dataclass(frozen=True)
class SensitivityWindow:
    scheme: Scheme
    n_photons: int
    theta_star: float
    theta_min: float
    theta_max: float
    coefficient: float
    symmetric_coefficient: float
    quoted_coefficient: float
    delta_bound: float
    quoted_delta_bound: float
    quoted_theta_min: float
    quoted_theta_max: float


def sensitivity_window(n_photons: int, scheme: Scheme, fidelity_target: Optional[float] = None,
                       points: int = 41) -> SensitivityWindow:
    """
    Range of theta around the first zero where the quadratic growth err ~ a delta^2 (delta in N theta units)
    stays within the error budget. The budget defaults to the spontaneous-emission level of the scheme.
    The coefficient a is fitted on the steep side of the zero only (delta <= 0), where the error grows
    faster, so the returned window is a conservative one-sided bound applied symmetrically. The curvature
    at the zero itself is returned as symmetric_coefficient; the window it would give is wider.
    """

    if scheme == Scheme.TF:
        quoted_coefficient, quoted_window, default_budget = QUOTED_TF_QUADRATIC, QUOTED_TF_WINDOW, QUOTED_TF_BUDGET

        def err(x: float) -> float:
            return eta(n_photons, x / n_photons)
    elif scheme == Scheme.NOON:
        quoted_coefficient, quoted_window, default_budget = QUOTED_NOON_QUADRATIC, QUOTED_NOON_WINDOW, QUOTED_NOON_BUDGET

        def err(x: float) -> float:
            return kappa(n_photons, x / n_photons)
    else:
        raise FormulaDomainException("The coherent scheme has no zero to tune around")

    budget = (1.0 - fidelity_target) if fidelity_target is not None else default_budget / n_photons
    if budget <= 0.0:
        raise FormulaDomainException(f"Error budget must be positive, got {budget}")

    theta_star = find_first_zero(n_photons, scheme)
    x_star = theta_star * n_photons
    quoted_delta = math.sqrt(budget / quoted_coefficient)

    deltas = np.linspace(-quoted_delta, 0.0, points)
    coefficient = fit_quadratic_coefficient(deltas, [err(x_star + d) for d in deltas])

    step = 1e-3
    symmetric = (err(x_star + step) + err(x_star - step)) / (2.0 * step ** 2)

    delta = math.sqrt(budget / coefficient)
    print(f"{scheme.value} N={n_photons}: a={coefficient:.4f} (symmetric {symmetric:.4f}), delta < {delta:.4f}")

    return SensitivityWindow(scheme, n_photons, theta_star,
                             (x_star - delta) / n_photons, (x_star + delta) / n_photons,
                             coefficient, float(symmetric), quoted_coefficient, delta, quoted_delta,
                             theta_star - quoted_window * theta_star ** 1.5, theta_star + quoted_window * theta_star ** 1.5)
