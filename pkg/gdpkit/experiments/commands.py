"""
The experiments behind the command line: damping rates report, Kraus report, channel metrics table,
pair entanglement table and parameter sweeps. Every cmd_* writes its output and returns the exit code.
"""

__version__ = '1.0'
__all__ = [
    'EXIT_OK', 'EXIT_CONFIG', 'EXIT_NUMERIC', 'EXIT_IO',
    'METRICS_COLUMNS', 'ENTANGLE_COLUMNS', 'SWEEP_COLUMNS',
    'rates_report', 'kraus_report', 'metrics_table', 'entangle_table', 'sweep_table', 'self_check',
    'cmd_rates', 'cmd_kraus', 'cmd_metrics', 'cmd_entangle', 'cmd_sweep'
]

__author__ = 'GDPKIT'

from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from progress.bar import Bar
from termcolor import colored

from .config import ExperimentConfig, PAIR_CUTOFF
from .csv_output import Table, format_value, render_table, parse_table, table_columns, write_text
from .filters import (ShapeFilter, StateFilter, VolumeFilter, EntropyFilter, DistanceFilter, InvariantFilter,
                      ConcurrenceFilter, ExtremaFilter)
from .pipeline import FilterChain, Stream
from .plotting import plot_figures
from ..bath.ohmic import damping_rates
from ..channels.me2kraus import (KrausSet, LocalGenerator, generator_matrix, propagator, choi, kraus_from_choi,
                                 channel_action_distance, apply_channel)
from ..channels.gdp_channel import generator_from_micro, shape, standard_generator
from ..entanglement.pair import QubitHamiltonian
from ..entanglement.sudden_death import QubitChannel, esd_time
from ..metrics.measures import von_neumann_entropy, trace_distance
from ..validation.validation import density_matrix_validator
from ..utils import logger as log

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3
EXIT_IO = 4

# Largest channel action difference accepted between closed form and numeric Kraus sets.
KRAUS_DISCREPANCY_TOL = 1e-8
# Accepted difference between a stored and a recomputed value in the self check.
SELF_CHECK_TOL = 1e-9

METRICS_COLUMNS = (
    "t", "tau", "V_gdp", "V_dp", "kappa_gdp", "kappa_dp", "S_gdp", "S_dp",
    "Tdist_gdp_init", "Tdist_dp_init", "Tdist_gdp_dp", "S_gdp_bits", "S_dp_bits"
)
# Columns whose extrema over the grid close the metrics table.
EXTREMA_COLUMNS = ("S_gdp", "S_dp", "Tdist_gdp_init", "Tdist_dp_init", "Tdist_gdp_dp")
ENTANGLE_COLUMNS = ("t", "C_gdp", "C_dp", "EoF_gdp", "EoF_dp")
SWEEP_COLUMNS = ("T", "alpha", "omegac")

METRICS_FIGURES = (
    ("volume", {"V_gdp": "GDP", "V_dp": "DP"}, "V", "Bloch ellipsoid volume"),
    ("entropy", {"S_gdp": "GDP", "S_dp": "DP"}, "S", "von Neumann entropy"),
    ("distance", {"Tdist_gdp_init": "GDP vs initial", "Tdist_dp_init": "DP vs initial",
                  "Tdist_gdp_dp": "GDP vs DP"}, "D", "trace distance")
)
ENTANGLE_FIGURES = (
    ("concurrence", {"C_gdp": "GDP", "C_dp": "DP"}, "C", "concurrence of the Bell state"),
    ("eof", {"EoF_gdp": "GDP", "EoF_dp": "DP"}, "EoF", "entanglement of formation")
)


def _generator(config: ExperimentConfig, omega0: Optional[float] = None) -> LocalGenerator:
    micro = config.micro(omega0)
    for warning in micro.regime_warnings():
        log.w(warning)
    return generator_from_micro(micro, config.high_t_approx)


def _parameters_line(config: ExperimentConfig, g: LocalGenerator) -> str:
    micro = config.micro()
    return "T={!r} alpha={!r} omega0={!r} omegac={!r} omegamax={!r} x={!r} y={!r} z={!r} high_t_approx={}".format(
        micro.temperature, micro.coupling, micro.qubit_freq, micro.cutoff, micro.integration_cap,
        g.x, g.y, g.z, config.high_t_approx)


def _run_chain(chain: FilterChain, times: Sequence[float], label: str) -> List[Dict]:
    '''
    Feeds the time grid to the chain and collects the finished rows in order of t.
    '''
    rows = []
    bar = Bar(colored(label, "magenta"), max=len(times))

    def on_data_output():
        for row in chain.streams()["rows"]:
            rows.append(row)
        bar.next()

    chain.execute({"grid": Stream([{"t": float(t)} for t in times], is_closed=True)}, on_data_output=on_data_output)
    bar.finish()
    failures = chain.state("invariant_failures", [])
    if failures:
        raise ValueError("state invariants violated: {}".format(failures[:5]))
    return rows


def rates_report(config: ExperimentConfig) -> List[Tuple[str, str]]:
    '''
    Returns:
        The key=value pairs of the rates report: damping rates, Lamb shift, generator, shape and warnings.
    '''
    micro = config.micro()
    rates = damping_rates(micro, config.high_t_approx)
    g = LocalGenerator(rates.lamb_delta, rates.gamma_zz0, rates.gamma_plus)
    c = shape(g, 0.0)
    report = [
        ("gamma_zz0", format_value(rates.gamma_zz0)),
        ("gamma_plus", format_value(rates.gamma_plus)),
        ("gamma_minus", format_value(rates.gamma_minus)),
        ("lamb_delta", format_value(rates.lamb_delta)),
        ("x", format_value(g.x)),
        ("y", format_value(g.y)),
        ("z", format_value(g.z)),
        ("theta", "none" if c is None else format_value(c.theta)),
        ("omega", "none" if c is None else format_value(c.omega)),
        ("high_t_approx", str(config.high_t_approx)),
    ]
    for warning in micro.regime_warnings():
        log.w(warning)
        report.append(("warning", warning))
    return report


def _kraus_sets(g: LocalGenerator, kind: str, t: float) -> Tuple[KrausSet, KrausSet]:
    '''
    Returns:
        The closed form and the numerically derived Kraus sets of a channel at t.
    '''
    generator = g if kind == "gdp" else standard_generator(g)
    closed = StateFilter.kraus(kind, shape(generator, t))
    numeric = kraus_from_choi(choi(propagator(generator_matrix(generator), t)), time_tag=t)
    return closed, numeric


def _format_matrix(m: np.ndarray, part) -> str:
    return ";".join(",".join("{:.11e}".format(value) for value in part(row)) for row in m)


def kraus_report(config: ExperimentConfig) -> Tuple[List[Tuple[str, str]], float]:
    '''
    Returns:
        The key=value pairs of the Kraus report and the largest discrepancy between the closed form
        and the numeric channels.
    '''
    g = _generator(config)
    t = config.kraus_t
    c = shape(g, t)
    report = [
        ("t", format_value(t)),
        ("tau", format_value(0.0 if c is None else c.tau)),
        ("theta", "none" if c is None else format_value(c.theta)),
        ("omega", "none" if c is None else format_value(c.omega)),
    ]
    worst = 0.0
    for kind in config.channels():
        closed, numeric = _kraus_sets(g, kind, t)
        for label, k in (("closed", closed), ("numeric", numeric)):
            for index, op in enumerate(k.ops, start=1):
                report.append(("{}_{}_E{}_re".format(kind, label, index), _format_matrix(op, np.real)))
                report.append(("{}_{}_E{}_im".format(kind, label, index), _format_matrix(op, np.imag)))
        discrepancy = channel_action_distance(closed, numeric)
        report.append(("{}_discrepancy".format(kind), format_value(discrepancy)))
        worst = max(worst, discrepancy)
    return report, worst


def metrics_table(config: ExperimentConfig, label: str = "metrics") -> Tuple[Table, Mapping]:
    '''
    Returns:
        The channel metrics table over the time grid, closed by the extrema of its entropy and distance
        columns, and the final state of the filter chain.
    '''
    g = _generator(config)
    state_keys = ["_rho_" + name for name in config.channels()]
    extrema = ExtremaFilter("checked", "rows", table_columns(EXTREMA_COLUMNS, config.channels()))
    chain = FilterChain([
        ShapeFilter("grid", "shaped", g),
        StateFilter("shaped", "states", config.initial_state()),
        VolumeFilter("states", "volumes", g),
        EntropyFilter("volumes", "entropies"),
        DistanceFilter("entropies", "distances"),
        InvariantFilter("distances", "checked", state_keys),
        extrema
    ])
    rows = _run_chain(chain, config.times(), label)
    table = Table(table_columns(METRICS_COLUMNS, config.channels()), rows, leading=[_parameters_line(config, g)],
                  trailing=extrema.summary())
    return table, chain.state_dict


def entangle_table(config: ExperimentConfig) -> Table:
    '''
    Returns:
        The concurrence and entanglement of formation of the Bell state over the time grid, with the
        sudden death times as trailing comment.
    '''
    generators = [_generator(config, omega) for omega in (config.omega1, config.omega2)]
    hamiltonians = [QubitHamiltonian(config.omega1), QubitHamiltonian(config.omega2)]
    channels = {
        kind: tuple(QubitChannel(g, kind, h) for g, h in zip(generators, hamiltonians))
        for kind in config.channels()
    }
    chain = FilterChain([
        ConcurrenceFilter("grid", "pairs", channels),
        InvariantFilter("pairs", "rows", ["_pair_" + kind for kind in channels])
    ])
    rows = _run_chain(chain, config.times(), "entangle")
    esd = []
    for kind, (first, second) in channels.items():
        found = esd_time(first, second, config.t_end, config.step())
        esd.append("esd_{}={}".format(kind, "none" if found is None else format_value(found)))
    micro = config.micro()
    leading = ["T={!r} alpha={!r} omegac={!r} omega1={!r} omega2={!r} high_t_approx={}".format(
        micro.temperature, micro.coupling, micro.cutoff, config.omega1, config.omega2, config.high_t_approx)]
    if micro.cutoff == PAIR_CUTOFF:
        leading.append("omegac={!r} is the assumed default cutoff of the pair experiment".format(PAIR_CUTOFF))
    return Table(table_columns(ENTANGLE_COLUMNS, config.channels()), rows, leading, [" ".join(esd)])


def sweep_table(config: ExperimentConfig) -> Table:
    '''
    Returns:
        One metrics block per (T, alpha, omega_c) triple of the sweep, rows tagged by the triple.
    '''
    points = config.sweep_points()
    columns = list(SWEEP_COLUMNS) + table_columns(METRICS_COLUMNS, config.channels())
    rows, leading, trailing = [], [], []
    for temperature, alpha, omegac in points:
        point = config.with_bath(temperature, alpha, omegac)
        block, _ = metrics_table(point, "T={} alpha={} omegac={}".format(temperature, alpha, omegac))
        leading.extend(block.leading)
        tag = "T={!r} alpha={!r} omegac={!r}".format(temperature, alpha, omegac)
        trailing.extend("{} {}".format(tag, line) for line in block.trailing)
        for row in block.rows:
            row.update({"T": temperature, "alpha": alpha, "omegac": omegac})
            rows.append(row)
    return Table(columns, rows, leading, trailing)


def self_check(config: ExperimentConfig, text: str) -> List[str]:
    '''
    Re-reads a metrics or sweep table, rebuilds the states of every row and checks them against the
    density matrix invariants and the stored entropies and distances.

    Returns:
        A description of every failure, empty when the table is consistent.
    '''
    table = parse_table(text)
    validator = density_matrix_validator()
    initial = config.initial_state()
    failures = []
    generators = {}
    for row in table.rows:
        point = config
        if "T" in row:
            point = config.with_bath(row["T"], row["alpha"], row["omegac"])
        key = (point.temperature, point.alpha, point.omegac)
        if key not in generators:
            generators[key] = _generator(point)
        g = generators[key]
        for kind in config.channels():
            generator = g if kind == "gdp" else standard_generator(g)
            c = shape(generator, row["t"])
            rho = apply_channel(StateFilter.kraus(kind, c), initial)
            failed = validator.failures(rho.mat)
            if failed:
                failures.append("t={!r} {}: failed {}".format(row["t"], kind, failed))
            expected = {
                "S_" + kind: von_neumann_entropy(rho),
                "Tdist_{}_init".format(kind): trace_distance(rho, initial)
            }
            for column, value in expected.items():
                if abs(row[column] - value) > SELF_CHECK_TOL:
                    failures.append("t={!r} {}: stored {!r}, recomputed {!r}".format(
                        row["t"], column, row[column], value))
    return failures


def _finish_table(config: ExperimentConfig, table: Table, figures, check: bool) -> int:
    text = render_table(table)
    write_text(text, config.out)
    if config.emit_svg and figures:
        for path in plot_figures(table, config.out, figures):
            log.d("written {}".format(path))
    if check and config.self_check:
        failures = self_check(config, text)
        if failures:
            for failure in failures:
                log.e(failure)
            return EXIT_NUMERIC
        log.i("self check passed on {} rows".format(len(table.rows)))
    return EXIT_OK


def cmd_rates(config: ExperimentConfig) -> int:
    text = "".join("{}={}\n".format(key, value) for key, value in rates_report(config))
    write_text(text, config.out)
    return EXIT_OK


def cmd_kraus(config: ExperimentConfig) -> int:
    report, worst = kraus_report(config)
    write_text("".join("{}={}\n".format(key, value) for key, value in report), config.out)
    if worst > KRAUS_DISCREPANCY_TOL:
        log.e("closed form and numeric kraus sets differ by {:.3e}".format(worst))
        return EXIT_NUMERIC
    return EXIT_OK


def cmd_metrics(config: ExperimentConfig) -> int:
    table, _ = metrics_table(config)
    return _finish_table(config, table, METRICS_FIGURES, check=True)


def cmd_entangle(config: ExperimentConfig) -> int:
    table = entangle_table(config)
    log.i(table.trailing[0])
    return _finish_table(config, table, ENTANGLE_FIGURES, check=False)


def cmd_sweep(config: ExperimentConfig) -> int:
    table = sweep_table(config)
    if config.emit_svg:
        log.w("svg figures are not drawn for sweeps, plot the table by its T, alpha, omegac columns")
    return _finish_table(config, table, None, check=True)
