"""
Configuration of the command line experiments. Values come from the command defaults, then from an optional
key=value file, then from the command line flags, each layer overriding the previous one.
"""

__version__ = '1.0'
__all__ = [
    'ExperimentConfig', 'KEYS', 'ELLIPSOID_PRESET', 'PAIR_CUTOFF', 'build_config', 'parse_values',
    'parse_floats', 'parse_bloch'
]

__author__ = 'GDPKIT'

from dataclasses import dataclass, fields, replace
from typing import Any, Callable, Dict, Mapping, Optional, Tuple

import numpy as np

from ..algebra.density_matrix import DensityMatrix
from ..bath.ohmic import MicroParams
from ..metrics.bloch import BlochVector, bloch_to_density
from ..utils import config as config_file

CHANNEL_CHOICES = ("gdp", "dp", "both")
PRESET_CHOICES = ("ellipsoids",)

# (T, alpha, omega_c) of the ellipsoid comparison, largest volume first.
ELLIPSOID_PRESET = (
    (50.0, 0.005, 15.0),
    (100.0, 0.005, 50.0),
    (50.0, 0.02, 15.0),
    (50.0, 0.02, 50.0),
    (100.0, 0.02, 15.0)
)


def _to_bool(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError("'{}' is not a boolean".format(value))


def parse_floats(value: str) -> Tuple[float, ...]:
    return tuple(float(item) for item in value.split(",") if item.strip())


def parse_bloch(value: str) -> Tuple[float, float, float]:
    items = parse_floats(value)
    if len(items) != 3:
        raise ValueError("a bloch vector needs three comma separated numbers, got '{}'".format(value))
    return items


def _to_optional_float(value: str) -> Optional[float]:
    return None if value.strip().lower() in ("", "none") else float(value)


def _to_optional_str(value: str) -> Optional[str]:
    return None if value.strip().lower() in ("", "none") else value.strip()


# config key -> (ExperimentConfig field, parser of the raw text value)
KEYS: Dict[str, Tuple[str, Callable[[str], Any]]] = {
    "channel": ("channel", str),
    "T": ("temperature", float),
    "alpha": ("alpha", float),
    "omega0": ("omega0", float),
    "omegac": ("omegac", float),
    "omegamax": ("omegamax", _to_optional_float),
    "t_start": ("t_start", float),
    "t_end": ("t_end", float),
    "points": ("points", int),
    "u": ("u", float),
    "v": ("v", float),
    "bloch": ("bloch", parse_bloch),
    "omega1": ("omega1", float),
    "omega2": ("omega2", float),
    "kraus_t": ("kraus_t", float),
    "high_t_approx": ("high_t_approx", _to_bool),
    "emit_svg": ("emit_svg", _to_bool),
    "self_check": ("self_check", _to_bool),
    "out": ("out", _to_optional_str),
    "sweep_T": ("sweep_temperature", parse_floats),
    "sweep_alpha": ("sweep_alpha", parse_floats),
    "sweep_omegac": ("sweep_omegac", parse_floats),
    "sweep_preset": ("sweep_preset", _to_optional_str),
}


@dataclass(frozen=True)
class ExperimentConfig:
    '''
    Parameters of one command line run.

    Attributes:
        channel : str
            "gdp", "dp" or "both", the channels whose columns and Kraus sets are produced.
        temperature, alpha, omega0, omegac, omegamax : float
            Microscopic parameters, omegamax None for 20 omegac.
        t_start, t_end : float
            Time window, 0 <= t_start < t_end.
        points : int
            Number of grid points, >= 2.
        u, v : float
            Bloch angles of the initial state, ignored when bloch is given.
        bloch : Tuple[float, float, float]
            Bloch vector of the initial state.
        omega1, omega2 : float
            Frequencies of the two qubits of the pair experiment.
        kraus_t : float
            Time of the Kraus report.
        high_t_approx, emit_svg, self_check : bool
            Flags.
        out : str
            Output path, None for stdout.
        sweep_temperature, sweep_alpha, sweep_omegac : Tuple[float]
            Values of the Cartesian sweep, None keeps the single configured value.
        sweep_preset : str
            "ellipsoids" to sweep the preset triples instead.
    '''
    channel: str = "both"
    temperature: float = 50.0
    alpha: float = 0.02
    omega0: float = 1.0
    omegac: float = 15.0
    omegamax: Optional[float] = None
    t_start: float = 0.0
    t_end: float = 1.0
    points: int = 101
    u: float = 0.0
    v: float = 0.0
    bloch: Optional[Tuple[float, float, float]] = None
    omega1: float = 0.1
    omega2: float = 0.2
    kraus_t: float = 0.1
    high_t_approx: bool = False
    emit_svg: bool = False
    self_check: bool = False
    out: Optional[str] = None
    sweep_temperature: Optional[Tuple[float, ...]] = None
    sweep_alpha: Optional[Tuple[float, ...]] = None
    sweep_omegac: Optional[Tuple[float, ...]] = None
    sweep_preset: Optional[str] = None

    def __post_init__(self):
        '''
        Raises:
            ValueError
                If a value is out of range, including the microscopic parameters and the initial state.
        '''
        if self.channel not in CHANNEL_CHOICES:
            raise ValueError("channel must be one of {}, got '{}'".format(CHANNEL_CHOICES, self.channel))
        if self.points < 2:
            raise ValueError("points must be at least 2, got {}".format(self.points))
        if not 0 <= self.t_start < self.t_end:
            raise ValueError("time window must satisfy 0 <= t_start < t_end, got [{}, {}]".format(
                self.t_start, self.t_end))
        if self.kraus_t < 0:
            raise ValueError("kraus_t must be non negative, got {}".format(self.kraus_t))
        if self.sweep_preset is not None and self.sweep_preset not in PRESET_CHOICES:
            raise ValueError("unknown sweep preset '{}', known presets: {}".format(self.sweep_preset, PRESET_CHOICES))
        self.micro()
        self.initial_state()
        self.sweep_points()

    def micro(self, omega0: Optional[float] = None) -> MicroParams:
        '''
        Parameters:
            omega0 : float
                Qubit frequency replacing the configured one (pair experiment).
        '''
        return MicroParams(self.temperature, self.alpha, self.omega0 if omega0 is None else omega0,
                           self.omegac, self.omegamax)

    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.points)

    def step(self) -> float:
        return (self.t_end - self.t_start) / (self.points - 1)

    def initial_bloch(self) -> BlochVector:
        if self.bloch is not None:
            return BlochVector(self.bloch)
        return BlochVector.from_angles(self.u, self.v)

    def initial_state(self) -> DensityMatrix:
        return bloch_to_density(self.initial_bloch())

    def channels(self) -> Tuple[str, ...]:
        return ("gdp", "dp") if self.channel == "both" else (self.channel,)

    def sweep_points(self) -> Tuple[Tuple[float, float, float], ...]:
        '''
        Returns:
            The (T, alpha, omega_c) triples of the sweep: the preset ones, or the Cartesian product
            of the sweep lists with the configured value standing in for a missing list.
        Raises:
            ValueError
                If a sweep list is empty.
        '''
        if self.sweep_preset == "ellipsoids":
            return ELLIPSOID_PRESET
        lists = (self.sweep_temperature, self.sweep_alpha, self.sweep_omegac)
        if any(values is not None and len(values) == 0 for values in lists):
            raise ValueError("empty sweep, every sweep list needs at least one value")
        temperatures = self.sweep_temperature or (self.temperature,)
        alphas = self.sweep_alpha or (self.alpha,)
        cutoffs = self.sweep_omegac or (self.omegac,)
        return tuple((t, a, c) for t in temperatures for a in alphas for c in cutoffs)

    def with_bath(self, temperature: float, alpha: float, omegac: float) -> "ExperimentConfig":
        return replace(self, temperature=temperature, alpha=alpha, omegac=omegac)


# The pair experiment names no cutoff, it borrows the one of the single qubit runs.
PAIR_CUTOFF = 15.0

# Per command defaults overriding the dataclass ones.
COMMAND_DEFAULTS: Mapping[str, Mapping[str, Any]] = {
    "rates": {},
    "kraus": {},
    "metrics": {},
    "sweep": {"t_end": 0.05, "points": 11},
    "entangle": {"temperature": 10.0, "alpha": 0.02, "omegac": PAIR_CUTOFF, "omega1": 0.1, "omega2": 0.2,
                 "t_end": 1.0, "points": 201},
}


def parse_values(raw: Mapping[str, str], source: str) -> Dict[str, Any]:
    '''
    Converts raw key=value strings to ExperimentConfig fields.

    Raises:
        ValueError
            If a key is unknown or a value does not parse.
    '''
    values = dict()
    for key, text in raw.items():
        if key not in KEYS:
            raise ValueError("unknown configuration key '{}' in {}".format(key, source))
        name, parser = KEYS[key]
        try:
            values[name] = parser(text)
        except ValueError as err:
            raise ValueError("invalid value '{}' for '{}' in {}: {}".format(text, key, source, err)) from err
    return values


def build_config(command: str, filename: Optional[str] = None,
                 flags: Optional[Mapping[str, Any]] = None) -> ExperimentConfig:
    '''
    Parameters:
        command : str
            Name of the command, selects the defaults.
        filename : str
            Optional key=value configuration file.
        flags : Mapping[str, Any]
            Already parsed command line values by field name, None values are ignored.
    Raises:
        ValueError
            If the file is malformed or the resulting configuration is invalid.
        OSError
            If the file cannot be read.
    Returns:
        The validated ExperimentConfig.
    '''
    if command not in COMMAND_DEFAULTS:
        raise ValueError("unknown command '{}'".format(command))
    values = dict(COMMAND_DEFAULTS[command])
    if filename is not None:
        values.update(parse_values(config_file.read_file(filename), filename))
    known = {f.name for f in fields(ExperimentConfig)}
    for name, value in (flags or {}).items():
        if value is None:
            continue
        if name not in known:
            raise ValueError("unknown configuration field '{}'".format(name))
        values[name] = value
    return ExperimentConfig(**values)
