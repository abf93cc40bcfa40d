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

import os

from typing import Union

import numpy as np

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.exceptions import ConfigurationException


#****************************************************************************************************
# Global Variables
#****************************************************************************************************

NORM_TOLERANCE = 1e-10
SIGNIFICANT_DIGITS = 17


#****************************************************************************************************
# Utility Functions
#****************************************************************************************************

def format_float(x: Union[float, int, np.floating]) -> str:
    """
    Formats a real number with 17 significant digits, independent of locale.
    """
    return format(float(x), f".{SIGNIFICANT_DIGITS}g")


def worker_count(default: int = None) -> int:
    """
    Returns the number of sweep workers, bounded by the QIL_THREADS environment variable.
    """
    cpus = os.cpu_count() or 1
    limit = os.environ.get("QIL_THREADS")
    if limit is None or limit.strip() == "":
        return default if default is not None else cpus
    try:
        value = int(limit)
    except ValueError:
        raise ConfigurationException(f"QIL_THREADS must be a positive integer, got '{limit}'", key="QIL_THREADS")
    if value < 1:
        raise ConfigurationException(f"QIL_THREADS must be a positive integer, got '{limit}'", key="QIL_THREADS")
    return value


def parse_complex(text: str) -> complex:
    """
    Parses a Python complex literal such as '0.6', '0.8j' or '0.6+0.8j'.
    """
    return complex(text.strip().replace(" ", ""))


def bits_of(index: int, n_bits: int) -> str:
    return format(index, f"0{n_bits}b")
