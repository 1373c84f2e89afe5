"""
Concurrence dynamics of a qubit pair under local GDP or standard depolarizing channels, and detection of
entanglement sudden death (concurrence reaching zero at finite time).
"""

__version__ = '1.0'
__all__ = [
    'QubitChannel', 'pair_concurrence', 'concurrence_curve', 'esd_time', 'ESD_THRESHOLD'
]

__author__ = 'GDPKIT'

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..channels.me2kraus import LocalGenerator, KrausSet
from ..channels.gdp_channel import shape, standard_generator, gdp_kraus, standard_kraus
from .pair import QubitHamiltonian, BELL_PHI_PLUS, schrodinger_dress, evolve_pair
from .concurrence import concurrence
from ..utils import logger as log

ESD_THRESHOLD = 1e-9
ESD_REL_TOL = 1e-6

KINDS = ("gdp", "dp")


@dataclass(frozen=True)
class QubitChannel:
    '''
    Local channel of one qubit of the pair.

    Attributes:
        generator : LocalGenerator
            Generator of the qubit dynamics.
        kind : str
            "gdp" for the channel of the generator itself, "dp" for its standard depolarizing comparison.
        hamiltonian : QubitHamiltonian
            Free Hamiltonian used to dress the Kraus set into the Schrodinger picture, None to skip it.
    '''
    generator: LocalGenerator
    kind: str = "gdp"
    hamiltonian: Optional[QubitHamiltonian] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError("channel kind must be one of {}, got '{}'".format(KINDS, self.kind))

    def kraus_at(self, t: float) -> KrausSet:
        '''
        Parameters:
            t : float
                Physical time, >= 0.
        Returns:
            The Kraus set of the channel at t, the identity for a generator without dissipation.
        '''
        if self.kind == "gdp":
            c = shape(self.generator, t)
            k = KrausSet.identity(t) if c is None else gdp_kraus(c)
        else:
            c = shape(standard_generator(self.generator), t)
            k = KrausSet.identity(t) if c is None else standard_kraus(c.tau)
        if self.hamiltonian is not None:
            k = schrodinger_dress(k, self.hamiltonian, t)
        return k


def pair_concurrence(first: QubitChannel, second: QubitChannel, t: float,
                     psi0: Sequence[complex] = BELL_PHI_PLUS) -> float:
    return concurrence(evolve_pair(psi0, first.kraus_at(t), second.kraus_at(t)))


def concurrence_curve(first: QubitChannel, second: QubitChannel, times: Sequence[float],
                      psi0: Sequence[complex] = BELL_PHI_PLUS) -> np.ndarray:
    '''
    Parameters:
        first, second : QubitChannel
            Channels of qubit 1 and qubit 2.
        times : Sequence[float]
            Physical times, >= 0.
        psi0 : Sequence[complex]
            Initial pair state, the Bell state (|00> + |11>)/sqrt(2) by default.
    Returns:
        The concurrence at each time.
    '''
    return np.array([pair_concurrence(first, second, t, psi0) for t in times])


def esd_time(first: QubitChannel, second: QubitChannel, t_max: float, step: float,
             psi0: Sequence[complex] = BELL_PHI_PLUS) -> Optional[float]:
    '''
    Finds the first time the concurrence drops to 1e-9 or below. The grid 0, step, 2 step, ... up to t_max
    is scanned, then the crossing is bisected to 1e-6 relative.

    Parameters:
        first, second : QubitChannel
            Channels of qubit 1 and qubit 2.
        t_max : float
            End of the scan.
        step : float
            Grid step, > 0.
        psi0 : Sequence[complex]
            Initial pair state.
    Raises:
        ValueError
            If step is not positive.
    Returns:
        The sudden death time, None if the state stays entangled up to t_max.
    '''
    if not step > 0:
        raise ValueError("scan step must be positive, got {}".format(step))

    def dead(t):
        return pair_concurrence(first, second, t, psi0) <= ESD_THRESHOLD

    if dead(0.0):
        return 0.0
    count = int(np.floor(t_max / step + 1e-9))
    grid = [k * step for k in range(1, count + 1)]
    if not grid or grid[-1] < t_max:
        grid.append(t_max)
    lo = 0.0
    for hi in grid:
        if dead(hi):
            break
        lo = hi
    else:
        return None

    while hi - lo > ESD_REL_TOL * hi:
        mid = (lo + hi) / 2
        if dead(mid):
            hi = mid
        else:
            lo = mid
    log.v("sudden death at t={:.9g}".format(hi))
    return hi
