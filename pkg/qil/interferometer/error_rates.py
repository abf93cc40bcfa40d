# -*- coding: utf-8 -*-
"""
Created on Monday 10/19/2026
Author: qil developers
Email: qil-dev@example.org

False-null rates of the three schemes: closed forms, exact Fock-space evaluations, their zeros and fits.
All angles are single-qubit phases theta; most fits work in the scaled variable x = N theta.
"""

#****************************************************************************************************
# Imports
#****************************************************************************************************

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# External
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

import numpy as np

from scipy.optimize import bisect, brentq, curve_fit
from scipy.special import gammaln, jn_zeros

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.auto_printer import AutoPrinter
from qil.exceptions import FormulaDomainException, NoZeroFoundException
from qil.fock.dual_mode_state import DualModeState
from qil.fock.state_factory import DEFAULT_TAIL_TOLERANCE, make_state
from qil.fock.state_spec import StateSpec
from qil.interferometer.outcome_record import Scheme
from qil.interferometer.pipelines import run_mz, run_noon
from qil.qubits.coupling import make_joint
from qil.qubits.qubit_state import QubitAmplitudes

def print(msg): AutoPrinter.static_print(msg)


#****************************************************************************************************
# Global Variables
#****************************************************************************************************

SCAN_STEP = 0.05
BISECTION_TOLERANCE = 1e-8
CLOSED_FORM_MAX_N = 100

_IMBALANCED = [QubitAmplitudes(1.0, 0.0), QubitAmplitudes(1.0, 0.0)]


#****************************************************************************************************
# Error Rates
#****************************************************************************************************

@dataclass(frozen=True)
class ErrorRates:
    """
    The false-null rates at one (N, theta): coherent epsilon, twin-Fock eta, NOON kappa and the
    single-loss twin-Fock rate eta_loss.
    """
    n_photons: int
    theta: float
    epsilon: float
    eta: float
    kappa: float
    eta_loss: float

    @staticmethod
    def evaluate(n_photons: int, theta: float) -> ErrorRates:
        xi = xi_amplitudes(n_photons, theta)
        return ErrorRates(n_photons, theta,
                          epsilon(n_photons, theta),
                          abs(xi[0]) ** 2,
                          kappa(n_photons, theta),
                          _eta_loss_from(xi, n_photons))


#****************************************************************************************************
# Imbalanced-branch outputs
#****************************************************************************************************

def imbalanced_output(light: DualModeState, theta: float, noon: bool = False) -> DualModeState:
    """
    Output light of the |00> branch, where both qubits shift the upper arm.
    """
    j = make_joint(light, _IMBALANCED)
    j_out = run_noon(j, theta) if noon else run_mz(j, theta)
    return j_out.light("00")


def xi_amplitudes(n_photons: int, theta: float) -> Dict[int, complex]:
    """
    Amplitudes xi_m of |N+m, N-m> in the twin-Fock output of an imbalanced branch, by exact evolution.
    The common phase (-1)^N exp(-2iN theta) shared with the balanced branch is removed, which leaves xi_m real.
    """

    output = imbalanced_output(DualModeState.basis(n_photons, n_photons), theta)
    phase = (-1) ** n_photons * np.exp(-2j * n_photons * theta)
    return {m: complex(output.amplitude(n_photons + m, n_photons - m) / phase) for m in range(-n_photons, n_photons + 1)}


def xi_m(n_photons: int, m: int, theta: float) -> complex:

    if abs(m) > n_photons:
        raise FormulaDomainException(f"|m| must not exceed N={n_photons}, got m={m}")
    return xi_amplitudes(n_photons, theta)[m]


def xi_closed_form(n_photons: int, m: int, theta: float) -> float:
    """
    Rotation-matrix sum for the same amplitude,
    sum_k (-1)^(k+m) N! sqrt((N+m)!(N-m)!) / ((N-k)! k! (N-k-m)! (k+m)!) cos(theta)^(2N-2k-m) sin(theta)^(2k+m).
    It equals (-1)^m xi_m; the alternating sum loses precision quickly, so N is capped.
    """

    if abs(m) > n_photons:
        raise FormulaDomainException(f"|m| must not exceed N={n_photons}, got m={m}")
    if n_photons > CLOSED_FORM_MAX_N:
        raise FormulaDomainException(f"Closed form is only evaluated up to N={CLOSED_FORM_MAX_N}")

    n = n_photons
    cos, sin = np.cos(theta), np.sin(theta)
    total = 0.0
    for k in range(max(0, -m), min(n, n - m) + 1):
        log_magnitude = gammaln(n + 1) + 0.5 * (gammaln(n + m + 1) + gammaln(n - m + 1)) \
            - gammaln(n - k + 1) - gammaln(k + 1) - gammaln(n - k - m + 1) - gammaln(k + m + 1)
        total += (-1) ** (k + m) * np.exp(log_magnitude) * cos ** (2 * n - 2 * k - m) * sin ** (2 * k + m)
    return float(total)


#****************************************************************************************************
# Rates
#****************************************************************************************************

def epsilon(n_photons: float, theta: float) -> float:
    return float(np.exp(-n_photons * theta ** 2))


def simulated_epsilon(n_photons: int, theta: float, tail_tolerance: float = DEFAULT_TAIL_TOLERANCE) -> float:
    """
    Exact probability of zero upper-port photons for an imbalanced branch with a coherent input of mean N.
    """
    light = make_state(StateSpec.coherent(np.sqrt(n_photons)), tail_tolerance)
    return imbalanced_output(light, theta).count_distribution(0).get(0, 0.0)


def eta(n_photons: int, theta: float) -> float:
    return abs(xi_amplitudes(n_photons, theta)[0]) ** 2


def kappa(n_photons: int, theta: float) -> float:
    return float(np.cos(n_photons * theta) ** 2)


def simulated_kappa(n_photons: int, theta: float) -> float:
    """
    Exact probability that the lower port stays empty for an imbalanced branch with a NOON input.
    """
    output = imbalanced_output(make_state(StateSpec.noon(n_photons)), theta, noon=True)
    return sum(p for (n0, n1), p in _probabilities(output) if n1 == 0)


def _eta_loss_from(xi: Dict[int, complex], n_photons: int) -> float:
    return abs(xi[0] + 1j * xi.get(1, 0j) * np.sqrt(1.0 + 1.0 / n_photons)) ** 2


def eta_loss(n_photons: int, theta: float) -> float:
    """
    |xi_0 + i xi_1 sqrt(1 + 1/N)|^2, the false-null rate once one photon is lost between the qubits.
    """
    return _eta_loss_from(xi_amplitudes(n_photons, theta), n_photons)


def kappa_prime(n_photons: float, theta: float) -> float:
    """
    Closed form (1 - exp(-theta^2 N / 2)) / 2 quoted for the coherent-superposition input.
    """
    return 0.5 * (1.0 - np.exp(-theta ** 2 * n_photons / 2.0))


def kappa_prime_series(n_photons: float, theta: float) -> float:
    """
    Exact false-null probability of the coherent-superposition input (|a,0> + |0,a>), |a|^2 = N:
    [1 + exp(-2N sin^2 theta) cos(N sin 2 theta) + 2 exp(-N)] / (2 (1 + exp(-N))).
    """
    vacuum = np.exp(-n_photons)
    numerator = 1.0 + np.exp(-2.0 * n_photons * np.sin(theta) ** 2) * np.cos(n_photons * np.sin(2.0 * theta)) + 2.0 * vacuum
    return float(numerator / (2.0 * (1.0 + vacuum)))


def simulated_kappa_prime(n_photons: float, theta: float, tail_tolerance: float = DEFAULT_TAIL_TOLERANCE) -> float:
    light = make_state(StateSpec.coherent_noon(np.sqrt(n_photons)), tail_tolerance)
    output = imbalanced_output(light, theta, noon=True)
    return sum(p for (n0, n1), p in _probabilities(output) if n1 == 0)


def _probabilities(state: DualModeState):
    return ((key, abs(value) ** 2) for key, value in state.items())


#****************************************************************************************************
# Fidelities
#****************************************************************************************************

def fidelities(balanced: float, err: float) -> Tuple[float, float]:
    """
    (f_nul, f_avg) for balanced weight Lambda and false-null rate err.
    When a null cannot occur at all (Lambda = err = 0) f_nul is reported as 1.
    """

    if not (0.0 <= balanced <= 1.0 and 0.0 <= err <= 1.0):
        raise FormulaDomainException(f"Lambda and err must lie in [0, 1], got {balanced} and {err}")

    null = balanced + (1.0 - balanced) * err
    f_nul = balanced / null if null > 0.0 else 1.0
    f_avg = 1.0 - (1.0 - balanced) * err
    return f_nul, f_avg


#****************************************************************************************************
# Zeros
#****************************************************************************************************

def x1_asymptotic(n_photons: float) -> float:
    """
    Large-N first zero of the twin-Fock false-null amplitude in N theta, from the first zero of J0.
    """
    return float(jn_zeros(0, 1)[0] * n_photons / (2.0 * n_photons + 1.0))


def find_first_zero(n_photons: int, scheme: Scheme) -> float:
    """
    Smallest theta > 0 where the false-null rate vanishes.
    The twin-Fock zero is bracketed by scanning N theta and refined by bisection on the signed xi_0;
    the NOON zero is pi / 2N, checked against the exact pipeline.
    """

    if n_photons < 1:
        raise FormulaDomainException(f"N must be at least 1, got {n_photons}")

    if scheme == Scheme.NOON:
        theta = np.pi / (2.0 * n_photons)
        residual = simulated_kappa(n_photons, theta)
        if residual > 1e-12:
            raise NoZeroFoundException(f"NOON false-null rate at pi/2N is {residual}, expected 0")
        return float(theta)

    if scheme != Scheme.TF:
        raise FormulaDomainException("The coherent false-null rate has no zero")

    def signed(x: float) -> float:
        return xi_amplitudes(n_photons, x / n_photons)[0].real

    x_max = n_photons * np.pi
    lower, value = SCAN_STEP, signed(SCAN_STEP)
    while lower < x_max:
        upper = min(lower + SCAN_STEP, x_max)
        upper_value = signed(upper)
        if np.sign(upper_value) != np.sign(value):
            x = bisect(signed, lower, upper, xtol=BISECTION_TOLERANCE)
            print(f"N={n_photons}: first zero at N theta = {x:.10f}")
            return float(x / n_photons)
        lower, value = upper, upper_value

    raise NoZeroFoundException(f"No sign change of xi_0 for N={n_photons} in (0, pi]")


#****************************************************************************************************
# Fits
#****************************************************************************************************

def fit_eta_loss_coefficient(n_photons: int, x_range: Tuple[float, float] = (2.0, 20.0), points: int = 200) -> float:
    """
    Least-squares coefficient c of eta_loss ~ c / (N theta) over the given N theta range.
    """
    xs = np.linspace(x_range[0], x_range[1], points)
    values = np.array([eta_loss(n_photons, x / n_photons) for x in xs])
    (coefficient,), _ = curve_fit(lambda x, c: c / x, xs, values, p0=[0.3])
    return float(coefficient)


def fit_heisenberg_decay(n_photons: int, x_max: float = 0.8, points: int = 40) -> float:
    """
    Gaussian decay constant a of eta ~ exp(-a (N theta)^2) below the first zero.
    """
    xs = np.linspace(x_max / points, x_max, points)
    values = np.array([eta(n_photons, x / n_photons) for x in xs])
    (decay,), _ = curve_fit(lambda x, a: -a * x ** 2, xs, np.log(values), p0=[1.0])
    return float(decay)


def fit_quadratic_coefficient(xs: Sequence[float], values: Sequence[float]) -> float:
    """
    Least-squares a in values ~ a xs^2.
    """
    (coefficient,), _ = curve_fit(lambda d, a: a * d ** 2, np.asarray(xs), np.asarray(values), p0=[1.0])
    return float(coefficient)


#****************************************************************************************************
# Error injection
#****************************************************************************************************

def false_null_rate(scheme: Scheme, n_photons: float, theta: float) -> float:
    """
    Probability that an imbalanced branch reads as a null, by exact evolution.
    """
    if scheme == Scheme.COHERENT:
        return simulated_epsilon(n_photons, theta)
    if scheme == Scheme.TF:
        return eta(int(n_photons), theta)
    return simulated_kappa(int(n_photons), theta)


def theta_for_error(scheme: Scheme, n_photons: float, err: float) -> float:
    """
    Smallest theta at which the exact false-null rate equals err.
    The coherent rate is exp(-N sin^2 theta) and never vanishes; the NOON rate is cos^2(N theta);
    the twin-Fock rate is inverted by root finding below its first zero.
    """

    if not 0.0 <= err <= 1.0:
        raise FormulaDomainException(f"err must lie in [0, 1], got {err}")

    if scheme == Scheme.NOON:
        return float(np.arccos(np.sqrt(err)) / n_photons)

    if scheme == Scheme.COHERENT:
        if err == 0.0:
            raise FormulaDomainException("The coherent false-null rate never vanishes")
        sin2 = -np.log(err) / n_photons
        if sin2 > 1.0:
            raise FormulaDomainException(f"err={err} is below exp(-N)={np.exp(-n_photons):.6g}")
        return float(np.arcsin(np.sqrt(sin2)))

    n = int(n_photons)
    x_zero = find_first_zero(n, Scheme.TF) * n
    if err == 0.0:
        return x_zero / n
    if err == 1.0:
        return 0.0
    x = brentq(lambda v: eta(n, v / n) - err, 0.0, x_zero, xtol=1e-12)
    return float(x / n)
