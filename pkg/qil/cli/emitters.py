# -*- coding: utf-8 -*-
"""
Created on Monday 10/19/2026
Author: qil developers
Email: qil-dev@example.org

Deterministic CSV and JSON writers: 17 significant digits, '\n' line endings, sorted JSON keys.
"""

#****************************************************************************************************
# Imports
#****************************************************************************************************

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# External
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

import csv
import io
import json

from enum import Enum
from typing import Any, Dict, List, Sequence, TextIO

import numpy as np

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.qubits.mixed_ensemble import MixedEnsemble
from qil.qubits.qubit_state import QubitState
from qil.utils import format_float


#****************************************************************************************************
# CSV
#****************************************************************************************************

def format_cell(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    return str(value)


def write_csv(header: Sequence[str], rows: Sequence[Sequence[Any]], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(v) for v in row])


def csv_text(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    write_csv(header, rows, buffer)
    return buffer.getvalue()


#****************************************************************************************************
# JSON
#****************************************************************************************************

def register_amplitudes(state: QubitState) -> Dict[str, List[float]]:
    return {key: [value.real, value.imag] for key, value in state.items(1e-15)}


def ensemble_to_json(ensemble: Any) -> List[Dict[str, Any]]:
    """
    A qubit state as a list of {weight, amplitudes} members, amplitudes keyed by basis string.
    """
    if isinstance(ensemble, QubitState):
        ensemble = MixedEnsemble.pure(ensemble)
    return [{"weight": w, "amplitudes": register_amplitudes(m)} for w, m in ensemble]


def to_jsonable(value: Any) -> Any:
    """
    Converts results to plain JSON types. Floats are rounded through 17 significant digits,
    complex numbers become [re, im].
    """

    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(format_float(value))
        return value if np.isfinite(value) else str(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [to_jsonable(value.real), to_jsonable(value.imag)]
    if isinstance(value, (QubitState, MixedEnsemble)):
        return to_jsonable(ensemble_to_json(value))
    return value


def json_text(payload: Any) -> str:
    return json.dumps(to_jsonable(payload), sort_keys=True, indent=2) + "\n"


def write_json(payload: Any, out: TextIO) -> None:
    out.write(json_text(payload))
