"""
Its purpose is to read values from flat key=value configuration files to speed up experiment setup.
Lines starting with '#' and blank lines are ignored, text after an inline '#' is a comment.
"""

__version__ = '1.2'
__all__ = [
    'parse_lines',
    'read_file'
]

__author__ = 'GDPKIT'

from pathlib import Path
from typing import Dict, Mapping


def parse_lines(text: str, source: str = "<string>") -> Dict[str, str]:
    '''
    Parses key=value lines.

    Parameters:
        text : str
            Contents of a configuration file.
        source : str
            Name of the source, only used in error messages.
    Raises:
        ValueError
            If a non-comment line has no '=' or an empty key.
    Returns:
        dict mapping each key to its raw (stripped) string value, the last occurrence wins.
    '''
    values = dict()
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError("line {} of {} is not a key=value pair: '{}'".format(lineno, source, raw_line))
        key, value = line.split("=", 1)
        key = key.strip()
        if not key:
            raise ValueError("line {} of {} has an empty key".format(lineno, source))
        values[key] = value.strip()
    return values


def read_file(filename: str) -> Mapping[str, str]:
    '''
    Reads a configuration file.

    Parameters:
        filename : str
            Path of the configuration file.
    Raises:
        FileNotFoundError
            If the file does not exist.
        ValueError
            If the file is malformed, see parse_lines.
    Returns:
        Mapping of keys to raw string values.
    '''
    with Path(filename).open("r") as config_file:
        return parse_lines(config_file.read(), source=str(Path(filename)))

