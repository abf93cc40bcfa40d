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

import inspect
import os
import sys


#****************************************************************************************************
# Verbosity
#****************************************************************************************************

_verbose = os.environ.get("QIL_VERBOSE", "").lower() in ("1", "true", "yes")


def set_verbose(enabled: bool) -> None:
    global _verbose
    _verbose = enabled


def is_verbose() -> bool:
    return _verbose


#****************************************************************************************************
# Auto Printer
#****************************************************************************************************

class AutoPrinter:
    """
    A utility class to provide smart printing to derived classes.
    Smart printing simply prepends the caller class and function names to the printed string.
    To use this feature, derived classes should simply call `self.print()` instead of `print()`.
    Output goes to stderr and only when verbose printing is enabled, so stdout stays free for data.
    """

    def print(self, text: str, level: int = 1) -> None:

        if not _verbose:
            return

        try:
            sys.stderr.write("[ %s ][ %s() ] - %s\n" % (str(self.__class__.__name__), str(inspect.stack()[level][3]), text))
            sys.stderr.flush()
        except Exception:
            sys.stderr.write("ERROR: Failed to print '%s'\n" % str(text))

    @staticmethod
    def static_print(text):

        if not _verbose:
            return

        frame = inspect.stack()[1]
        filename = frame[0].f_code.co_filename
        sys.stderr.write(f"[ {os.path.basename(filename)} ] - {text}\n")
        sys.stderr.flush()

    @staticmethod
    def error_print(text):
        """
        Unconditional diagnostic, used for errors that end a CLI run.
        """
        frame = inspect.stack()[1]
        filename = frame[0].f_code.co_filename
        sys.stderr.write(f"[ {os.path.basename(filename)} ] - {text}\n")
        sys.stderr.flush()
