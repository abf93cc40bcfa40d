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

from typing import Any, Callable, Dict, Iterable, Mapping, Optional, Tuple

import numpy as np

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.auto_printer import AutoPrinter
from qil.budget.physical_params import LossDistribution
from qil.cli.run_config import RunConfig
from qil.exceptions import ConfigurationException, InvalidStateSpecException
from qil.interferometer.outcome_record import Scheme
from qil.protocols.protocol_config import ExecutionMode
from qil.qubits.qubit_state import QubitAmplitudes
from qil.utils import parse_complex


#****************************************************************************************************
# Value parsers
#****************************************************************************************************

def parse_grid(text: str) -> Tuple[float, ...]:
    """
    Parses 'start:stop:count' (inclusive endpoints) or an explicit comma-separated list of N theta values.
    The grid must be strictly increasing with at least two points.
    """

    text = text.strip()
    try:
        if ":" in text:
            start, stop, count = text.split(":")
            if int(count) < 2:
                raise ConfigurationException(f"A grid needs at least 2 points, got {count}", key="grid")
            grid = tuple(float(v) for v in np.linspace(float(start), float(stop), int(count)))
        else:
            grid = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise ConfigurationException(f"Malformed grid '{text}', expected start:stop:count or a list", key="grid")

    if len(grid) < 2:
        raise ConfigurationException(f"A grid needs at least 2 points, got {len(grid)}", key="grid")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ConfigurationException("Grid values must be strictly increasing", key="grid")
    return grid


def parse_qubit(text: str) -> QubitAmplitudes:
    """
    Parses 'chi0,chi1' with complex literals; the pair is normalized.
    """
    parts = text.split(",")
    if len(parts) != 2:
        raise ConfigurationException(f"Qubit amplitudes need the form chi0,chi1, got '{text}'")
    try:
        return QubitAmplitudes.normalize(parse_complex(parts[0]), parse_complex(parts[1]))
    except InvalidStateSpecException as e:
        raise ConfigurationException(e.message)


def parse_bool(text: str) -> bool:
    value = text.strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise ConfigurationException(f"Expected a boolean, got '{text}'")


def parse_quantities(text: str) -> Tuple[str, ...]:
    return tuple(q.strip() for q in text.split(",") if q.strip())


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ConfigurationException(f"Expected a positive integer, got {value}")
    return value


PARSERS: Dict[str, Callable[[str], Any]] = {
    "scheme": Scheme.parse,
    "n_photons": float,
    "cavity_passes": _positive_int,
    "waist_ratio": float,
    "detuning_ratio": float,
    "theta": float,
    "seed": int,
    "mode": lambda text: ExecutionMode(text.strip().lower()),
    "out": str.strip,
    "format": lambda text: text.strip().lower(),
    "grid": parse_grid,
    "quantities": parse_quantities,
    "chi_x": parse_qubit,
    "chi_y": parse_qubit,
    "trials": _positive_int,
    "n_qubits": _positive_int,
    "c00": parse_complex,
    "c11": parse_complex,
    "fidelity_target": float,
    "target_error": float,
    "loss_mean": float,
    "loss_distribution": lambda text: LossDistribution(text.strip().lower()),
    "single_loss": parse_bool,
}


#****************************************************************************************************
# Run Config Factory
#****************************************************************************************************

class RunConfigFactory(AutoPrinter):
    """
    A factory class for building a RunConfig from a key=value file and command-line overrides.
    Blank lines and lines starting with '#' are ignored. Overrides win over file values.
    """

    #================================================================================
    # Parse input
    #================================================================================

    def parse_file(self, filepath: str) -> Dict[str, Any]:
        """
        Parses a configuration file into typed values.
        :param filepath: the path to the key=value file
        :return: a dictionary from configuration keys to parsed values
        """

        try:
            with open(filepath, 'r') as f:
                return self.parse_lines(f.readlines())
        except OSError as e:
            raise ConfigurationException(f"Cannot read configuration file '{filepath}': {e.strerror}")

    def parse_lines(self, lines: Iterable[str]) -> Dict[str, Any]:

        values: Dict[str, Any] = {}
        for number, line in enumerate(lines, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigurationException(f"Expected key=value, got '{line}'", line=number)

            key, text = (part.strip() for part in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in PARSERS:
                raise ConfigurationException("Unknown configuration key", key=key, line=number)
            values[key] = self.parse_value(key, text, number)

        self.print(f"Parsed {len(values)} configuration values")
        return values

    @staticmethod
    def parse_value(key: str, text: str, line: Optional[int] = None) -> Any:
        try:
            return PARSERS[key](text)
        except ConfigurationException as e:
            raise ConfigurationException(e.message, key=key, line=line)
        except ValueError:
            raise ConfigurationException(f"Invalid value '{text}'", key=key, line=line)

    #================================================================================
    # Build
    #================================================================================

    def build(self, values: Mapping[str, Any], overrides: Optional[Mapping[str, Any]] = None) -> RunConfig:
        """
        Merges file values with overrides (None means not given) and validates the result.
        """

        merged = dict(values)
        for key, value in (overrides or {}).items():
            if value is not None:
                merged[key] = value

        unknown = set(merged) - set(PARSERS)
        if unknown:
            raise ConfigurationException("Unknown configuration key", key=sorted(unknown)[0])
        return RunConfig(**merged)

    def from_sources(self, filepath: Optional[str], overrides: Optional[Mapping[str, Any]] = None) -> RunConfig:
        values = self.parse_file(filepath) if filepath is not None else {}
        return self.build(values, overrides)
