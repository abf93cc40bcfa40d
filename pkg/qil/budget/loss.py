# -*- coding: utf-8 -*-
"""
Created on Monday 10/19/2026
Author: qil developers
Email: qil-dev@example.org

Photon loss between the two qubits: the loss-count laws, the phase-kick ensemble of the coherent scheme,
exact single-photon loss inside the twin-Fock interferometer and the NOON mixture.
"""

#****************************************************************************************************
# Imports
#****************************************************************************************************

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# External
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from typing import Dict, Optional, Tuple, Union

import numpy as np

from scipy.stats import norm, poisson

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.auto_printer import AutoPrinter
from qil.budget.physical_params import LossDistribution, LossModel
from qil.exceptions import FormulaDomainException, LossModelException, ZeroProbabilityOutcomeException
from qil.fock.dual_mode_state import DualModeState
from qil.fock.optics import annihilate, apply_beamsplitter
from qil.interferometer.detection import outcome_distribution
from qil.interferometer.outcome_record import Measurement
from qil.interferometer.pipelines import check_pair, run_noon
from qil.qubits.coupling import apply_qubit_interaction, make_joint
from qil.qubits.joint_state import JointState
from qil.qubits.mixed_ensemble import MixedEnsemble
from qil.qubits.qubit_state import QubitAmplitudes, QubitState

def print(msg): AutoPrinter.static_print(msg)


#****************************************************************************************************
# Global Variables
#****************************************************************************************************

LOSS_TAIL_TOLERANCE = 1e-10

_IMBALANCED = [QubitAmplitudes(1.0, 0.0), QubitAmplitudes(1.0, 0.0)]


#****************************************************************************************************
# Loss-count laws
#****************************************************************************************************

def loss_distribution(mean_lost: float, distribution: LossDistribution = LossDistribution.POISSON,
                      tail_tolerance: float = LOSS_TAIL_TOLERANCE) -> Tuple[np.ndarray, np.ndarray]:
    """
    Probabilities f(k) of losing k photons from one arm, truncated where the upper tail drops below
    tail_tolerance and renormalized over the kept counts.
    The Gaussian law is exp(-(k - k_bar)^2 / 2 k_bar) restricted to k >= 0.
    :return: (counts, probabilities)
    """

    if mean_lost < 0.0:
        raise LossModelException(f"Mean loss must be non-negative, got {mean_lost}")
    if mean_lost == 0.0:
        return np.zeros(1, dtype=int), np.ones(1)

    if distribution == LossDistribution.POISSON:
        k_max = int(poisson.isf(tail_tolerance, mean_lost)) + 1
        counts = np.arange(k_max + 1)
        weights = poisson.pmf(counts, mean_lost)
    else:
        k_max = int(np.ceil(mean_lost + norm.isf(tail_tolerance) * np.sqrt(mean_lost))) + 1
        counts = np.arange(k_max + 1)
        weights = norm.pdf(counts, loc=mean_lost, scale=np.sqrt(mean_lost))

    return counts, weights / weights.sum()


def difference_distribution(mean_lost: float, distribution: LossDistribution = LossDistribution.POISSON,
                            tail_tolerance: float = LOSS_TAIL_TOLERANCE) -> Tuple[np.ndarray, np.ndarray]:
    """
    Law of d = k - k' for independent losses k, k' from the two arms.
    """
    counts, weights = loss_distribution(mean_lost, distribution, tail_tolerance)
    k_max = int(counts[-1])
    return np.arange(-k_max, k_max + 1), np.convolve(weights, weights[::-1])


def total_variation(mean_lost: float) -> float:
    """
    Total-variation distance between the Poisson and Gaussian loss-count laws at the same mean.
    """

    p_counts, p = loss_distribution(mean_lost, LossDistribution.POISSON)
    g_counts, g = loss_distribution(mean_lost, LossDistribution.GAUSSIAN)
    size = max(len(p_counts), len(g_counts))
    p = np.pad(p, (0, size - len(p)))
    g = np.pad(g, (0, size - len(g)))
    return float(0.5 * np.abs(p - g).sum())


#****************************************************************************************************
# Coherent scheme
#****************************************************************************************************

def apply_loss_coherent(posterior: Union[QubitState, MixedEnsemble], theta: float, loss: LossModel,
                        n_photons: float, kicked_qubit: int = 1, conjugate: bool = False) -> MixedEnsemble:
    """
    Mixture over the photons k, k' lost from the upper and lower arm between the qubits.
    Each lost photon carries the phase of the first qubit's interaction away, which leaves the kick
    exp(i theta k)|0><0| + exp(i theta k')|1><1| on the kicked qubit; only d = k - k' matters up to a
    global phase, so members are grouped by d.
    conjugate places the opposite kick, as on the other qubit of the pair.
    """

    loss.check(n_photons)
    base = posterior if isinstance(posterior, MixedEnsemble) else MixedEnsemble.pure(posterior)
    differences, weights = difference_distribution(loss.mean_lost, loss.distribution)
    sign = -1.0 if conjugate else 1.0

    members = []
    for d, weight in zip(differences, weights):
        if weight <= 0.0:
            continue
        for w, state in base:
            members.append((weight * w, state.with_phase(kicked_qubit, 0, sign * theta * d)))

    print(f"k_bar={loss.mean_lost:.6g}: {len(differences)} loss differences, {len(members)} members")
    return MixedEnsemble(members, renormalize=True)


def loss_fidelity_closed_form(mean_lost: float, theta: float) -> float:
    """
    Fidelity of a balanced Bell posterior after Poisson loss: (1 + exp(-2 k_bar (1 - cos theta))) / 2.
    """
    return float(0.5 * (1.0 + np.exp(-2.0 * mean_lost * (1.0 - np.cos(theta)))))


#****************************************************************************************************
# Twin-Fock scheme
#****************************************************************************************************

def run_mz_with_loss(j: JointState, theta: float, arm: int, pair: Tuple[int, int] = (0, 1)) -> JointState:
    """
    Mach-Zehnder pipeline with one photon removed from the given arm between the two qubit interactions.
    The result is not renormalized: its norm is the probability weight <n_arm> of that loss.
    """

    x, y = check_pair(j, pair)
    if arm not in (0, 1):
        raise LossModelException(f"Arm must be 0 or 1, got {arm}")

    first: Dict[int, DualModeState] = {}

    def split(key: str, light: DualModeState) -> DualModeState:
        if id(light) not in first:
            first[id(light)] = apply_beamsplitter(light)
        return first[id(light)]

    j = apply_qubit_interaction(j.map_lights(split), x, theta)
    j = j.map_lights(lambda key, light: annihilate(light, arm))
    j = apply_qubit_interaction(j, y, theta)
    return j.map_lights(lambda key, light: apply_beamsplitter(light), pipeline="mz")


def apply_loss_tf(j: JointState, theta: float, arm: Optional[int] = None,
                  pair: Tuple[int, int] = (0, 1)) -> Union[JointState, MixedEnsemble]:
    """
    Exact output after a single photon is lost between the qubits.
    With an arm the output is the renormalized pure joint state; without one the two arms are mixed
    with weights proportional to their photon expectations.
    """

    if arm is not None:
        lossy = run_mz_with_loss(j, theta, arm, pair)
        if lossy.norm2() <= 0.0:
            raise ZeroProbabilityOutcomeException(f"Arm {arm} holds no photon to lose")
        return lossy.normalized()

    members = []
    for lost_arm in (0, 1):
        lossy = run_mz_with_loss(j, theta, lost_arm, pair)
        weight = lossy.norm2()
        if weight > 0.0:
            members.append((weight, lossy.normalized()))
    if not members:
        raise ZeroProbabilityOutcomeException("No photon to lose in either arm")
    return MixedEnsemble(members, renormalize=True)


def loss_outcomes(ensemble: MixedEnsemble, measurement: Measurement) -> Dict[int, float]:
    """
    Outcome probabilities of a detector reading a mixture of joint states.
    """

    table: Dict[int, float] = {}
    for weight, j_out in ensemble:
        for record in outcome_distribution(j_out, measurement):
            table[record.value] = table.get(record.value, 0.0) + weight * record.probability
    return dict(sorted(table.items()))


def simulated_eta_loss(n_photons: int, theta: float) -> float:
    """
    False-null rate after one loss by exact evolution: the probability of |n0 - n1| = 1 in the
    imbalanced branch, both arms traced over.
    """

    j = make_joint(DualModeState.basis(n_photons, n_photons), _IMBALANCED)
    total = 0.0
    for weight, j_out in apply_loss_tf(j, theta):
        light = j_out.light("00").normalized()
        differences = light.difference_distribution()
        total += weight * (differences.get(1, 0.0) + differences.get(-1, 0.0))
    return float(total)


#****************************************************************************************************
# NOON scheme
#****************************************************************************************************

def apply_loss_noon(n_photons: int) -> MixedEnsemble:
    """
    A lost photon reveals which path the NOON state took: an equal mixture of |N-1,0> and |0,N-1>.
    """

    if n_photons < 1:
        raise FormulaDomainException(f"A NOON state needs N >= 1 to lose a photon, got {n_photons}")
    return MixedEnsemble([(0.5, DualModeState.basis(n_photons - 1, 0)), (0.5, DualModeState.basis(0, n_photons - 1))])


def noon_presence_after_loss(n_photons: int, theta: float, x: QubitAmplitudes, y: QubitAmplitudes) -> Dict[int, float]:
    """
    Presence-outcome probabilities of the NOON pipeline fed with the post-loss mixture.
    """

    outputs = apply_loss_noon(n_photons).map(lambda light: run_noon(make_joint(light, [x, y]), theta))
    return loss_outcomes(outputs, Measurement.NOON_PRESENCE)
