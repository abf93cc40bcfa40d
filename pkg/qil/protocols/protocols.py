# -*- coding: utf-8 -*-
"""
Created on Monday 10/19/2026
Author: qil developers
Email: qil-dev@example.org

Quantum-information procedures built on the interferometric entangling step: pair entanglement,
teleportation, N-qubit cat states and entanglement swapping.
"""

#****************************************************************************************************
# Imports
#****************************************************************************************************

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# External
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from tqdm import tqdm

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.auto_printer import AutoPrinter, is_verbose
from qil.budget.loss import apply_loss_coherent, apply_loss_noon, apply_loss_tf
from qil.exceptions import InvalidStateSpecException, ZeroProbabilityOutcomeException
from qil.fock.state_factory import make_state
from qil.fock.state_spec import StateSpec
from qil.interferometer.detection import imbalanced_sign, outcome_distribution
from qil.interferometer.error_rates import theta_for_error
from qil.interferometer.outcome_record import OutcomeRecord, Scheme, Subspace
from qil.interferometer.pipelines import check_pair, run_mz, run_noon
from qil.protocols.protocol_config import BranchResult, ProtocolConfig, ProtocolResult, TranscriptEntry
from qil.protocols.register_ops import (Register, half_pi_pulse, measure_qubit, measurement_branches, phase_imprint,
                                        pi_pulse, reduce_to)
from qil.qubits.coupling import qubit_fidelity
from qil.qubits.joint_state import JointState
from qil.qubits.mixed_ensemble import MixedEnsemble
from qil.qubits.qubit_state import QubitAmplitudes, QubitState


# (probability, register, transcript) of one partially executed branch
_Branch = Tuple[float, Register, Tuple[TranscriptEntry, ...]]


#****************************************************************************************************
# Protocol Runner
#****************************************************************************************************

class ProtocolRunner(AutoPrinter):
    """
    Executes protocols for one configuration.
    In exact mode every measurement branch is followed; in sampled mode a single branch is drawn from
    a generator seeded by the configuration, so equal seeds replay equal transcripts.
    """

    def __init__(self, config: ProtocolConfig):

        self.config = config
        self.__rng = config.rng()
        self.__n_photons = config.params.n_photons
        self.__theta = self.__tuned_theta()
        self.__light = make_state(self.__state_spec(), config.tail_tolerance)

    @property
    def theta(self) -> float:
        """
        Interferometer phase per photon actually used, after cavity passes or error retuning.
        """
        return self.__theta

    #================================================================================
    # Entangling step
    #================================================================================

    def entangle_pair(self, register: Register, pair: Tuple[int, int] = (0, 1)) -> List[OutcomeRecord]:
        """
        Runs the configured pipeline on a pair of the register, detects and collapses.
        Other qubits are carried along untouched. Exact mode returns every outcome,
        sampled mode a one-element list with the drawn outcome.
        """

        members = register.members if isinstance(register, MixedEnsemble) else [(1.0, register)]
        records = self.__combine([(weight, self.__records(state, pair)) for weight, state in members])

        loss = self.config.error_injection.loss
        if loss is not None:
            records = [replace(r, posterior=apply_loss_coherent(r.posterior, self.__theta, loss, self.__n_photons,
                                                                kicked_qubit=pair[1]))
                       for r in records]

        if self.__rng is None:
            return records

        probabilities = np.array([r.probability for r in records])
        chosen = records[int(self.__rng.choice(len(records), p=probabilities / probabilities.sum()))]
        self.print(f"Sampled outcome {chosen.value} with probability {chosen.probability:.6g}")
        return [chosen]

    #================================================================================
    # Protocols
    #================================================================================

    def teleport(self, source: QubitAmplitudes, fix_on_target: bool = False) -> ProtocolResult:
        """
        Moves the source qubit state onto a target prepared in (|0> + |1>)/sqrt(2).
        After the entangling step the pair is brought to chi0|00> + chi1|11>: a null is fixed by a pi-pulse
        on the target, a negative imbalanced sign by a pi phase on |1> of the source (or of the target).
        The source then gets a pi/2-pulse and is measured; the target's |1> takes a +-pi/2 phase.
        """

        source_index, target = 0, 1
        register = QubitState.product([source, QubitAmplitudes.plus()])
        branches = self.__entangle_and_fix([(1.0, register, ())], (source_index, target),
                                           sign_qubit=target if fix_on_target else source_index)
        branches = self.__disentangle(branches, source_index, target)

        ideal = QubitState(source.as_vector())
        return self.__result("teleport", branches, [target], ideal)

    def ghz(self, n_qubits: int) -> ProtocolResult:
        """
        Cat state (|0...0> + |1...1>)/sqrt(2) from n qubits in (|0> + |1>)/sqrt(2), by entangling the
        neighbouring pairs (0, 1), (1, 2), ... and fixing each round on the newly added qubit.
        """

        if n_qubits < 2:
            raise InvalidStateSpecException(f"A cat state needs at least 2 qubits, got {n_qubits}")

        branches: List[_Branch] = [(1.0, QubitState.product([QubitAmplitudes.plus()] * n_qubits), ())]
        for qubit in range(1, n_qubits):
            branches = self.__entangle_and_fix(branches, (qubit - 1, qubit), sign_qubit=qubit)

        ideal = QubitState.from_basis({"0" * n_qubits: 1.0, "1" * n_qubits: 1.0})
        return self.__result(f"ghz{n_qubits}", branches, list(range(n_qubits)), ideal)

    def ghz3(self) -> ProtocolResult:
        return self.ghz(3)

    def swap_entanglement(self, c00: complex, c11: complex) -> ProtocolResult:
        """
        Transfers the entanglement of (x, y) in c00|00> + c11|11> onto (x, z): (y, z) is entangled
        into c00|000> + c11|111>, then y is disentangled as the source is in teleportation.
        """

        if c00 == 0 and c11 == 0:
            raise InvalidStateSpecException("c00 and c11 cannot both vanish")

        x, y, z = 0, 1, 2
        pair_state = QubitState.from_basis({"00": c00, "11": c11})
        register = QubitState(np.kron(pair_state.vector, QubitAmplitudes.plus().as_vector()))

        branches = self.__entangle_and_fix([(1.0, register, ())], (y, z), sign_qubit=z)
        branches = self.__disentangle(branches, y, z)
        return self.__result("swap", branches, [x, z], pair_state)

    #================================================================================
    # Internals
    #================================================================================

    def __state_spec(self) -> StateSpec:
        scheme = self.config.scheme
        if scheme == Scheme.COHERENT:
            return StateSpec.coherent(np.sqrt(self.__n_photons))
        if scheme == Scheme.TF:
            return StateSpec.twin_fock(int(self.__n_photons))
        return StateSpec.noon(int(self.__n_photons))

    def __tuned_theta(self) -> float:
        err = self.config.error_injection.err
        if err is None:
            return self.config.params.effective_theta
        theta = theta_for_error(self.config.scheme, self.__n_photons, err)
        self.print(f"Phase retuned to theta={theta:.10g} for err={err}")
        return theta

    def __records(self, register: QubitState, pair: Tuple[int, int]) -> List[OutcomeRecord]:

        scheme = self.config.scheme
        j = JointState.from_register(register, self.__light)
        check_pair(j, pair)

        if self.config.error_injection.single_loss:
            if scheme == Scheme.TF:
                outputs = list(apply_loss_tf(j, self.__theta, None, pair))
            else:
                outputs = [(w, run_noon(JointState.from_register(register, light), self.__theta, pair))
                           for w, light in apply_loss_noon(int(self.__n_photons))]
        elif scheme == Scheme.NOON:
            outputs = [(1.0, run_noon(j, self.__theta, pair))]
        else:
            outputs = [(1.0, run_mz(j, self.__theta, pair))]

        return self.__combine([(w, outcome_distribution(j_out, scheme.measurement)) for w, j_out in outputs])

    @staticmethod
    def __combine(parts: Sequence[Tuple[float, List[OutcomeRecord]]]) -> List[OutcomeRecord]:
        """
        Outcome records of a mixture: probabilities add with the mixture weights, posteriors merge.
        """

        if len(parts) == 1 and parts[0][0] == 1.0:
            return parts[0][1]

        grouped = {}
        for weight, records in parts:
            for record in records:
                grouped.setdefault(record.value, []).append((weight * record.probability, record))

        combined = []
        for value in sorted(grouped):
            entries = grouped[value]
            probability = sum(p for p, _ in entries)
            posterior = MixedEnsemble.merge([(p, r.posterior) for p, r in entries])
            first = entries[0][1]
            combined.append(OutcomeRecord(first.measurement, value, probability, posterior, first.subspace))
        return combined

    def __entangle_and_fix(self, branches: List[_Branch], pair: Tuple[int, int], sign_qubit: int) -> List[_Branch]:
        """
        Entangles the pair on every branch and brings each outcome onto chi0|..0 0> + chi1|..1 1>.
        """

        x, y = pair
        expanded = []
        for probability, register, transcript in branches:
            for record in self.entangle_pair(register, pair):
                steps = transcript + (TranscriptEntry("entangle", (x, y), record.value, record.probability),)
                state = record.posterior
                if record.subspace == Subspace.BALANCED:
                    state = pi_pulse(state, y)
                    steps += (TranscriptEntry("pi_pulse", (y,)),)
                elif imbalanced_sign(record.measurement, record.value) < 0:
                    state = phase_imprint(state, sign_qubit, 1, np.pi)
                    steps += (TranscriptEntry("phase_imprint_pi", (sign_qubit,)),)
                expanded.append((probability * record.probability, state, steps))
        return expanded

    def __disentangle(self, branches: List[_Branch], measured: int, target: int) -> List[_Branch]:
        """
        pi/2-pulse and measurement on one qubit, then the +-pi/2 phase on |1> of the target.
        """

        expanded = []
        for probability, register, transcript in branches:
            register = half_pi_pulse(register, measured)
            steps = transcript + (TranscriptEntry("half_pi_pulse", (measured,)),)
            if self.__rng is None:
                outcomes = measurement_branches(register, measured)
            else:
                outcomes = [measure_qubit(register, measured, self.__rng)]
            for outcome in outcomes:
                phase = np.pi / 2.0 if outcome.bit == 0 else -np.pi / 2.0
                state = phase_imprint(outcome.posterior, target, 1, phase)
                expanded.append((probability * outcome.probability, state,
                                 steps + (TranscriptEntry("measure", (measured,), outcome.bit, outcome.probability),
                                          TranscriptEntry("phase_imprint_half_pi", (target,), outcome.bit))))
        return expanded

    def __result(self, kind: str, branches: List[_Branch], keep: List[int], ideal: QubitState) -> ProtocolResult:

        if not branches:
            raise ZeroProbabilityOutcomeException(f"{kind}: no branch with non-zero probability")

        results = []
        for probability, register, transcript in branches:
            state = reduce_to(register, keep)
            results.append(BranchResult(float(probability), state, qubit_fidelity(state, ideal), transcript))

        result = ProtocolResult(kind, tuple(results))
        self.print(f"{kind}: {len(results)} branches, fidelity {result.fidelity_vs_ideal:.12f}")
        return result


#****************************************************************************************************
# Module functions
#****************************************************************************************************

def entangle_pair(register: Register, pair: Tuple[int, int], config: ProtocolConfig) -> List[OutcomeRecord]:
    return ProtocolRunner(config).entangle_pair(register, pair)


def teleport(source: QubitAmplitudes, config: ProtocolConfig, fix_on_target: bool = False) -> ProtocolResult:
    return ProtocolRunner(config).teleport(source, fix_on_target)


def ghz3(config: ProtocolConfig) -> ProtocolResult:
    return ProtocolRunner(config).ghz3()


def swap_entanglement(c00: complex, c11: complex, config: ProtocolConfig) -> ProtocolResult:
    return ProtocolRunner(config).swap_entanglement(c00, c11)


#****************************************************************************************************
# Batches
#****************************************************************************************************

@dataclass(frozen=True)
class TrialSummary:
    kind: str
    trials: int
    mean_fidelity: float
    min_fidelity: float
    fidelities: Tuple[float, ...]


def run_trials(kind: str, config: ProtocolConfig, trials: int, seed: int, n_qubits: int = 3) -> TrialSummary:
    """
    Repeats a protocol on random inputs drawn from `seed`. Sampled configurations get one child seed
    per trial, so a batch replays exactly.
    """

    if trials < 1:
        raise InvalidStateSpecException(f"At least one trial is needed, got {trials}")

    inputs = np.random.default_rng(seed)
    children = np.random.SeedSequence(seed).spawn(trials)
    runs: List[Callable[[ProtocolRunner], ProtocolResult]] = []
    for _ in range(trials):
        if kind == "teleport":
            source = QubitAmplitudes.random(inputs)
            runs.append(lambda runner, s=source: runner.teleport(s))
        elif kind == "swap":
            pair = QubitAmplitudes.random(inputs)
            runs.append(lambda runner, p=pair: runner.swap_entanglement(p.chi0, p.chi1))
        elif kind == "ghz":
            runs.append(lambda runner: runner.ghz(n_qubits))
        else:
            raise InvalidStateSpecException(f"Unknown protocol '{kind}'")

    means, minima = [], []
    runner: Optional[ProtocolRunner] = None if config.sampled else ProtocolRunner(config)
    for run, child in tqdm(list(zip(runs, children)), desc=kind, leave=False, disable=not is_verbose()):
        if config.sampled:
            trial_seed = int(child.generate_state(1)[0])
            result = run(ProtocolRunner(replace(config, seed=trial_seed)))
        else:
            result = run(runner)
        means.append(result.fidelity_vs_ideal)
        minima.append(result.min_fidelity)

    return TrialSummary(kind, trials, float(np.mean(means)), float(np.min(minima)), tuple(means))
