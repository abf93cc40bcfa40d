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

import sys

from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import List, Sequence, Tuple

from tqdm import tqdm

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.auto_printer import AutoPrinter, is_verbose
from qil.cli.run_config import QUANTITIES
from qil.exceptions import ConfigurationException
from qil.interferometer.error_rates import ErrorRates, epsilon, kappa
from qil.utils import worker_count

def print(msg): AutoPrinter.static_print(msg)


#****************************************************************************************************
# Sweep Spec
#****************************************************************************************************

@dataclass(frozen=True)
class SweepSpec:
    """
    Error-rate curves at fixed N over a grid of N theta values.
    Columns follow the canonical order epsilon, eta, kappa, eta_loss whatever order they were requested in.
    """
    n_photons: int
    grid: Tuple[float, ...]
    quantities: Tuple[str, ...] = field(default=QUANTITIES)

    def __post_init__(self):

        if self.n_photons < 1 or not float(self.n_photons).is_integer():
            raise ConfigurationException(f"A sweep needs a positive integer N, got {self.n_photons}", key="n_photons")
        if len(self.grid) < 2:
            raise ConfigurationException(f"A grid needs at least 2 points, got {len(self.grid)}", key="grid")
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise ConfigurationException("Grid values must be strictly increasing", key="grid")
        if not self.quantities or set(self.quantities) - set(QUANTITIES):
            raise ConfigurationException(f"quantities must be a non-empty subset of {', '.join(QUANTITIES)}",
                                         key="quantities")

    @property
    def columns(self) -> List[str]:
        return [q for q in QUANTITIES if q in self.quantities]

    @property
    def header(self) -> List[str]:
        return ["N", "theta", "N_theta"] + self.columns


#****************************************************************************************************
# Evaluation
#****************************************************************************************************

def evaluate_point(n_photons: int, scaled_phase: float, columns: Sequence[str]) -> List[float]:
    """
    One CSV row: N, theta, N theta, then the requested rates.
    The twin-Fock amplitudes are only evolved when eta or eta_loss is requested.
    """

    theta = scaled_phase / n_photons
    if "eta" in columns or "eta_loss" in columns:
        rates = ErrorRates.evaluate(n_photons, theta)
        values = {"epsilon": rates.epsilon, "eta": rates.eta, "kappa": rates.kappa, "eta_loss": rates.eta_loss}
    else:
        values = {"epsilon": epsilon(n_photons, theta), "kappa": kappa(n_photons, theta)}
    return [n_photons, theta, scaled_phase] + [float(values[c]) for c in columns]


def run_sweep(spec: SweepSpec) -> List[List[float]]:
    """
    Evaluates every grid point, in parallel chunks when more than one worker is allowed.
    Rows come back in grid order.
    """

    n_photons = int(spec.n_photons)
    columns = spec.columns
    arguments = [(n_photons, x, columns) for x in spec.grid]
    pool_size = min(worker_count(), len(arguments))
    print(f"Sweeping {len(arguments)} points with {pool_size} workers")

    rows: List[List[float]] = []
    pbar = tqdm(total=len(arguments), file=sys.stderr, leave=False, disable=not is_verbose())
    if pool_size == 1:
        for args in arguments:
            rows.append(evaluate_point(*args))
            pbar.update(1)
    else:
        with Pool(pool_size) as p:
            for start in range(0, len(arguments), pool_size):
                chunk = arguments[start:start + pool_size]
                rows.extend(p.starmap(evaluate_point, chunk))
                pbar.update(len(chunk))
    pbar.close()

    return rows
