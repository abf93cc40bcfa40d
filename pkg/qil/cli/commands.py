# -*- coding: utf-8 -*-
"""
Created on Monday 10/19/2026
Author: qil developers
Email: qil-dev@example.org

The four command-line operations. Each takes a validated RunConfig and writes its table to a text stream.
"""

#****************************************************************************************************
# Imports
#****************************************************************************************************

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# External
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

import math

from dataclasses import asdict
from typing import Any, Dict, List, Optional, TextIO

import numpy as np

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.auto_printer import AutoPrinter
from qil.budget.budget import (QUOTED_ETA_LOSS_COEFFICIENT, QUOTED_ONE_LOSS_COEFFICIENT, QUOTED_X1, LimitScheme,
                               cavity_budget, epsilon_for_passes, fidelity_limit, first_zero_scaled, n_for_fidelity,
                               one_loss_coefficient, one_loss_phase, spontaneous_at_phase)
from qil.cli.emitters import ensemble_to_json, write_csv, write_json
from qil.cli.run_config import DEFAULT_WAIST_RATIO, RunConfig
from qil.cli.sweep import SweepSpec, run_sweep
from qil.exceptions import ConfigurationException
from qil.fock.optics import coherent_overlap, coherent_overlap_series
from qil.interferometer.detection import average_fidelity
from qil.interferometer.error_rates import eta_loss, false_null_rate, fidelities
from qil.interferometer.outcome_record import Scheme
from qil.protocols.protocol_config import ExecutionMode
from qil.protocols.protocols import ProtocolRunner, run_trials
from qil.qubits.coupling import balanced_weight
from qil.qubits.qubit_state import QubitAmplitudes, QubitState

def print(msg): AutoPrinter.static_print(msg)


#****************************************************************************************************
# Global Variables
#****************************************************************************************************

PROTOCOLS = ("teleport", "ghz", "swap")

_LIMITS = {Scheme.COHERENT: [LimitScheme.COHERENT_CAVITY],
           Scheme.TF: [LimitScheme.TF, LimitScheme.TF_ONE_LOSS],
           Scheme.NOON: [LimitScheme.NOON]}


def _json_only(config: RunConfig, command: str) -> None:
    if config.format not in (None, "json"):
        raise ConfigurationException(f"{command} only writes json", key="format")


#****************************************************************************************************
# Sweep
#****************************************************************************************************

def cmd_sweep(config: RunConfig, out: TextIO) -> None:
    """
    Error-rate curves over a grid of N theta values, as CSV (default) or JSON rows.
    """

    if config.grid is None:
        raise ConfigurationException("A sweep needs a grid", key="grid")
    spec = SweepSpec(config.require_photons(), config.grid, config.quantities)
    rows = run_sweep(spec)

    if config.format == "json":
        write_json({"header": spec.header, "rows": [dict(zip(spec.header, row)) for row in rows]}, out)
    else:
        write_csv(spec.header, rows, out)


#****************************************************************************************************
# Budget
#****************************************************************************************************

def budget_entry(limit: LimitScheme, n_photons: float, cavity_passes: int, waist_ratio: float,
                 fidelity_target: Optional[float], target_error: Optional[float]) -> Dict[str, Any]:
    """
    Best phase, spontaneous emission and intrinsic error there, and the resulting fidelity ceiling.
    With a target the required photon number and cavity passes are added.
    """

    n, m, w = n_photons, cavity_passes, waist_ratio
    entry: Dict[str, Any] = {}

    if limit == LimitScheme.COHERENT_CAVITY:
        eps = epsilon_for_passes(m, w)
        x = math.sqrt(n * -math.log(eps))
        entry.update(err=eps, P_sp=spontaneous_at_phase(x, n, m, w))
    elif limit == LimitScheme.TF:
        x = first_zero_scaled(n)
        entry.update(err=0.0, P_sp=spontaneous_at_phase(x, n, m, w), x1=x,
                     P_sp_times_N=spontaneous_at_phase(x, n, m, w) * n,
                     P_sp_times_N_quoted=spontaneous_at_phase(QUOTED_X1, n, m, w) * n)
    elif limit == LimitScheme.TF_ONE_LOSS:
        x = one_loss_phase(n, m, w)
        entry.update(err=QUOTED_ETA_LOSS_COEFFICIENT / x, P_sp=spontaneous_at_phase(x, n, m, w, rounded=False),
                     coefficient=one_loss_coefficient(w), coefficient_quoted=QUOTED_ONE_LOSS_COEFFICIENT)
    else:
        x = np.pi / 2.0
        entry.update(err=0.0, P_sp=spontaneous_at_phase(x, n, m, w),
                     P_sp_times_N=spontaneous_at_phase(x, n, m, w) * n)

    entry["theta_star"] = x / (n * m)
    entry["f_limit"] = fidelity_limit(limit, n, m, w, strict=False)
    entry["regime_ok"] = bool(entry["P_sp"] <= 1.0)

    if limit == LimitScheme.COHERENT_CAVITY:
        # lower-port overlap of distinct branches, exact next to the quoted small-angle form
        entry.update(lower_overlap=coherent_overlap(n, x / n), lower_overlap_quoted=coherent_overlap_series(n, x / n))
        target = target_error if target_error is not None else (
            1.0 - fidelity_target if fidelity_target is not None else None)
        if target is not None:
            budget = cavity_budget(target, w)
            entry.update(M_required=budget.passes_required, M_quoted=budget.passes_quoted,
                         mean_detected_photons=budget.mean_detected_photons, epsilon_target=target)
    elif fidelity_target is not None:
        n_required = n_for_fidelity(limit, fidelity_target, 1, w)
        entry.update(N_required=n_required, M_required=n_required / n)

    return entry


def cmd_budget(config: RunConfig, out: TextIO) -> bool:
    """
    Budget table per scheme; every scheme when none is configured.
    :return: True when some scheme violates P_sp <= 1; the table is written regardless
    """

    _json_only(config, "budget")
    n_photons = config.require_photons()
    waist_ratio = config.waist_ratio if config.waist_ratio is not None else DEFAULT_WAIST_RATIO
    limits = _LIMITS[config.scheme] if config.scheme is not None else list(LimitScheme)

    schemes = {limit.value: budget_entry(limit, n_photons, config.cavity_passes, waist_ratio,
                                         config.fidelity_target, config.target_error)
               for limit in limits}
    violated = [name for name, entry in schemes.items() if not entry["regime_ok"]]
    if violated:
        print(f"Regime violated (P_sp > 1) for {', '.join(violated)}")

    write_json({"n_photons": n_photons, "cavity_passes": config.cavity_passes, "waist_ratio": waist_ratio,
                "fidelity_target": config.fidelity_target, "target_error": config.target_error,
                "schemes": schemes, "regime_violations": violated}, out)
    return bool(violated)


#****************************************************************************************************
# Entangle
#****************************************************************************************************

def cmd_entangle(config: RunConfig, out: TextIO) -> None:
    """
    One entangling step on a qubit pair: the outcome distribution (exact) or one drawn outcome (sampled),
    with posteriors, the balanced weight and the fidelity figures.
    """

    _json_only(config, "entangle")
    scheme = config.require_scheme()
    runner = ProtocolRunner(config.protocol_config())
    x = config.chi_x if config.chi_x is not None else QubitAmplitudes.plus()
    y = config.chi_y if config.chi_y is not None else QubitAmplitudes.plus()

    records = runner.entangle_pair(QubitState.product([x, y]), (0, 1))
    balanced = balanced_weight(x, y)
    n_photons = config.require_photons()
    if scheme == Scheme.TF and config.single_loss:
        err = eta_loss(int(n_photons), runner.theta)
    else:
        err = false_null_rate(scheme, n_photons, runner.theta)
    err = min(max(err, 0.0), 1.0)
    f_nul, f_avg = fidelities(balanced, err)

    payload: Dict[str, Any] = {
        "scheme": scheme, "n_photons": config.n_photons, "theta": runner.theta, "mode": config.mode,
        "seed": config.seed, "balanced_weight": balanced, "err": err, "f_nul": f_nul, "f_avg": f_avg,
        "outcomes": [{"value": r.value, "probability": r.probability, "subspace": r.subspace,
                      "posterior": ensemble_to_json(r.posterior)} for r in records],
    }
    if config.mode == ExecutionMode.EXACT:
        payload["total_probability"] = sum(r.probability for r in records)
        payload["f_avg_simulated"] = average_fidelity(records, x, y)

    write_json(payload, out)


#****************************************************************************************************
# Protocol
#****************************************************************************************************

def _branches_to_json(result) -> List[Dict[str, Any]]:
    return [{"probability": b.probability, "fidelity": b.fidelity, "state": ensemble_to_json(b.state),
             "transcript": [asdict(entry) for entry in b.transcript]}
            for b in result.branches]


def cmd_protocol(kind: str, config: RunConfig, out: TextIO) -> None:
    """
    Teleportation, cat-state creation or entanglement swapping. With more than one trial the inputs are
    drawn at random from the seed and mean and minimum fidelity are reported.
    """

    _json_only(config, "protocol")
    if kind not in PROTOCOLS:
        raise ConfigurationException(f"Unknown protocol '{kind}', expected one of {', '.join(PROTOCOLS)}", key="kind")

    protocol_config = config.protocol_config()
    if config.trials > 1:
        summary = run_trials(kind, protocol_config, config.trials, config.seed if config.seed is not None else 0,
                             config.n_qubits)
        write_json({"kind": kind, "scheme": protocol_config.scheme, "trials": summary.trials,
                    "mean_fidelity": summary.mean_fidelity, "min_fidelity": summary.min_fidelity,
                    "fidelities": summary.fidelities}, out)
        return

    runner = ProtocolRunner(protocol_config)
    if kind == "teleport":
        result = runner.teleport(config.chi_x if config.chi_x is not None else QubitAmplitudes(1.0, 0.0))
    elif kind == "ghz":
        result = runner.ghz(config.n_qubits)
    else:
        result = runner.swap_entanglement(config.c00, config.c11)

    write_json({"kind": result.kind, "scheme": protocol_config.scheme, "theta": runner.theta,
                "fidelity": result.fidelity_vs_ideal, "min_fidelity": result.min_fidelity,
                "branches": _branches_to_json(result)}, out)
