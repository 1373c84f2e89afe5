"""
Command line entry point: gdp {rates | kraus | metrics | entangle | sweep} [flags].
Exit codes: 0 success, 2 configuration error, 3 numerical failure, 4 I/O error.
"""

__version__ = '1.0'
__all__ = ['main', 'build_parser']

__author__ = 'GDPKIT'

from pathlib import Path
from typing import Optional, Sequence
import argparse
import sys

from .experiments import commands
from .experiments.config import build_config, parse_floats, parse_bloch
from .utils import logger as log

COMMANDS = {
    "rates": commands.cmd_rates,
    "kraus": commands.cmd_kraus,
    "metrics": commands.cmd_metrics,
    "entangle": commands.cmd_entangle,
    "sweep": commands.cmd_sweep,
}

# flag -> (ExperimentConfig field, argparse type)
FLAGS = (
    ("--channel", "channel", str),
    ("--T", "temperature", float),
    ("--alpha", "alpha", float),
    ("--omega0", "omega0", float),
    ("--omegac", "omegac", float),
    ("--omegamax", "omegamax", float),
    ("--t-start", "t_start", float),
    ("--t-end", "t_end", float),
    ("--points", "points", int),
    ("--u", "u", float),
    ("--v", "v", float),
    ("--bloch", "bloch", parse_bloch),
    ("--omega1", "omega1", float),
    ("--omega2", "omega2", float),
    ("--kraus-t", "kraus_t", float),
    ("--out", "out", str),
    ("--sweep-T", "sweep_temperature", parse_floats),
    ("--sweep-alpha", "sweep_alpha", parse_floats),
    ("--sweep-omegac", "sweep_omegac", parse_floats),
    ("--sweep-preset", "sweep_preset", str),
)
SWITCHES = (
    ("--high-t-approx", "high_t_approx", "use the high temperature damping rates"),
    ("--emit-svg", "emit_svg", "also write SVG figures next to the table"),
    ("--self-check", "self_check", "re-read the written table and re-validate every row"),
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gdp", description="Kraus operators and metrics of the generalized depolarizing channel.")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub = subparsers.add_parser(name)
        sub.add_argument("--config", dest="config_file", default=None, help="key=value configuration file")
        sub.add_argument("--log-file", dest="log_file", default=None, help="also log to this file")
        for flag, field_name, kind in FLAGS:
            sub.add_argument(flag, dest=field_name, type=kind, default=None)
        for flag, field_name, text in SWITCHES:
            sub.add_argument(flag, dest=field_name, action="store_const", const=True, default=None, help=text)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    '''
    Parameters:
        argv : Sequence[str]
            Arguments without the program name, sys.argv[1:] when None.
    Returns:
        The exit code.
    '''
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        # argparse exits with 2 on bad flags and 0 on --help.
        return err.code if isinstance(err.code, int) else commands.EXIT_CONFIG
    values = vars(args)
    command = values.pop("command")
    config_file = values.pop("config_file")
    log_file = values.pop("log_file")

    try:
        if log_file is not None:
            log.set_log_file(Path(log_file))
        config = build_config(command, config_file, values)
    except (ValueError, OSError) as err:
        log.e("invalid configuration: {}".format(err))
        return commands.EXIT_CONFIG

    try:
        return COMMANDS[command](config)
    except OSError as err:
        log.e("cannot write output: {}".format(err))
        return commands.EXIT_IO
    except (ValueError, ArithmeticError, RuntimeError) as err:
        log.e("{} failed: {}".format(command, err))
        return commands.EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
