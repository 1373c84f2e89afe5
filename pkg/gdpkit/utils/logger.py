"""
Module to log progress, warnings and errors of the numerical experiments.
Console lines go to stderr, so that tables written on stdout stay clean.
A log file receives every message (VERBOSE included) once set_log_file has been called.
"""
__version__ = "1.1"
__all__ = ["v", "d", "i", "w", "e", "set_log_file", "set_console_priority"]
__author__ = "GDPKIT"

from typing import Optional, Tuple
from datetime import datetime
from termcolor import colored
from pathlib import Path

import os
import sys


def __caller_info() -> Tuple[str, int]:
    '''
    Gets some information about the module caller.
    Returns:
        The filename of the caller.
        The line number of the call.
    '''
    frame = sys._getframe(3)
    # Get rid of absolute path
    filename = os.path.splitext(os.path.basename(frame.f_code.co_filename))[0]
    return filename, frame.f_lineno


def __time() -> str:
    '''
    Returns:
        A formatted timestamp for logging.
    '''
    return datetime.now().strftime("%Y-%m-%d %H:%M:%S.%f")[:-3]


NAMES = (
    "VERBOSE",
    "DEBUG",
    "INFO",
    "WARNING",
    "ERROR"
)

COLORS = (
    "dark_grey",
    "cyan",
    "green",
    "yellow",
    "red"
)

# Messages below this priority are only written to the log file.
min_console_priority = 1
# No file logging until requested.
log_file: Optional[Path] = None


def set_log_file(path: Optional[Path]):
    '''
    Enables (or disables with None) logging on a file.
    Parameters:
        path : Path
            File the log lines are appended to. Its parent directory is created if missing.
    '''
    global log_file
    if path is not None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
    log_file = path


def set_console_priority(priority: int):
    '''
    Parameters:
        priority : int
            Lowest priority printed on the console, within 0 (verbose) and 5 (silent).
    Raises:
        ValueError
            If the priority is outside [0, 5].
    '''
    global min_console_priority
    if priority < 0 or priority > len(NAMES):
        raise ValueError("console priority {} is not within 0 and {}".format(priority, len(NAMES)))
    min_console_priority = priority


def v(msg: str):
    '''
    Logs a VERBOSE message.
    Parameters:
        msg : str
            Content of the message to log.
    '''
    _log(0, msg)


def d(msg: str):
    '''
    Logs a DEBUG message.
    Parameters:
        msg : str
            Content of the message to log.
    '''
    _log(1, msg)


def i(msg: str):
    '''
    Logs an INFO message.
    Parameters:
        msg : str
            Content of the message to log.
    '''
    _log(2, msg)


def w(msg: str):
    '''
    Logs a WARNING message.
    Parameters:
        msg : str
            Content of the message to log.
    '''
    _log(3, msg)


def e(msg: str):
    '''
    Logs an ERROR message.
    Parameters:
        msg : str
            Content of the message to log.
    '''
    _log(4, msg)


def _log(priority: int, msg: str):
    '''
    Logs the message keeping track of the datetime and priority level.

    Parameters:
        priority : int
            Level of priority, must be within 0 and 4 where 0 is a verbose message and 4 is an error.
        msg : str
            Content of the message to log.
    '''
    priority_name = NAMES[priority]
    caller, lineno = __caller_info()
    if log_file is not None:
        file_line = "{} {} {}:{} - {}".format(priority_name, __time(), caller, lineno, msg)
        with log_file.open("a") as f:
            f.write(file_line + "\n")
    if priority >= min_console_priority:
        console_line = colored(
            "{} {}:{} - {}".format(priority_name, caller, lineno, msg),
            COLORS[priority]
        )
        print(console_line, file=sys.stderr)
