# -*- coding: utf-8 -*-
"""
Created on Monday 10/19/2026
Author: qil developers
Email: qil-dev@example.org

Command-line entry point: sweep, budget, entangle and protocol subcommands.
Exit codes: 0 on success, 2 on invalid input, 3 when a budget leaves its physical regime.
"""

#****************************************************************************************************
# Imports
#****************************************************************************************************

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# External
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

import argparse
import sys

from contextlib import contextmanager
from datetime import timedelta
from time import time
from typing import Any, Dict, Iterator, List, Optional, TextIO

#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
# Internal
#++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

from qil.auto_printer import AutoPrinter, set_verbose
from qil.cli.commands import PROTOCOLS, cmd_budget, cmd_entangle, cmd_protocol, cmd_sweep
from qil.cli.run_config import RunConfig
from qil.cli.run_config_factory import PARSERS, RunConfigFactory
from qil.exceptions import ConfigurationException, QilException, RegimeViolationException

def print(msg): AutoPrinter.static_print(msg)


#****************************************************************************************************
# Global Variables
#****************************************************************************************************

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_REGIME = 3

COMMANDS = ("sweep", "budget", "entangle", "protocol")


#****************************************************************************************************
# Argument parsing
#****************************************************************************************************

def build_parser() -> argparse.ArgumentParser:
    """
    Every configuration key is also a --flag; values are parsed by the configuration factory
    so file and flag go through the same validation.
    """

    parser = argparse.ArgumentParser(prog="qil", description="Interferometric qubit entanglement simulator")
    subparsers = parser.add_subparsers(dest="command", required=True)

    for command in COMMANDS:
        sub = subparsers.add_parser(command)
        if command == "protocol":
            sub.add_argument("kind", choices=PROTOCOLS)
        sub.add_argument("--config", help="key=value configuration file; flags override its values")
        sub.add_argument("--verbose", action="store_true", help="progress and diagnostics on stderr")
        for key in PARSERS:
            if key == "single_loss":
                sub.add_argument("--single-loss", dest=key, action="store_const", const="true",
                                 help="lose exactly one photon between the qubits")
            else:
                sub.add_argument("--" + key.replace("_", "-"), dest=key, metavar=key.upper())

    return parser


def overrides_from(args: argparse.Namespace) -> Dict[str, Any]:
    return {key: RunConfigFactory.parse_value(key, getattr(args, key))
            for key in PARSERS if getattr(args, key) is not None}


@contextmanager
def output_stream(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    try:
        f = open(path, 'w', newline="")
    except OSError as e:
        raise ConfigurationException(f"Cannot write output file '{path}': {e.strerror}", key="out")
    with f:
        yield f


#****************************************************************************************************
# Main Code
#****************************************************************************************************

def run(args: argparse.Namespace, config: RunConfig) -> int:

    with output_stream(config.out) as out:
        if args.command == "sweep":
            cmd_sweep(config, out)
        elif args.command == "budget":
            if cmd_budget(config, out):
                return EXIT_REGIME
        elif args.command == "entangle":
            cmd_entangle(config, out)
        else:
            cmd_protocol(args.kind, config, out)
    return EXIT_OK


def main(argv: List[str]) -> int:

    start_time = time()
    args = build_parser().parse_args(argv)
    set_verbose(args.verbose)

    try:
        config = RunConfigFactory().from_sources(args.config, overrides_from(args))
        code = run(args, config)
    except RegimeViolationException as e:
        AutoPrinter.error_print(str(e))
        return EXIT_REGIME
    except QilException as e:
        AutoPrinter.error_print(str(e))
        return EXIT_INVALID

    print(f"Done! Time elapsed: {timedelta(seconds=time() - start_time)}")
    return code


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
