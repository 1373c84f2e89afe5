"""
Scan of the condition under which the depolarizing master equation reduces to the standard one,
2 gamma_zz(0) = gamma_xx(omega_0) + gamma_yy(omega_0), as a function of the qubit frequency.
"""

__version__ = '1.0'
__all__ = [
    'ReductionScan', 'reduction_condition', 'reduction_condition_roots'
]

__author__ = 'GDPKIT'

from dataclasses import dataclass
from typing import List

import numpy as np
from scipy import optimize

from .ohmic import MicroParams, dissipation_rates
from ..utils import logger as log

SCAN_RANGE = 5.0
STEPS_PER_CUTOFF = 1000
BISECTION_TOL = 1e-10


@dataclass(frozen=True)
class ReductionScan:
    '''
    Attributes:
        roots : List[float]
            Every omega_0 in [0, 5 omega_c] where the condition holds, ascending.
        f_at_zero : float
            Value of 2 gamma_zz(0) - 2 gamma(omega_0) at omega_0 = 0.
        degenerate : bool
            True when the condition holds identically (decoupled bath), roots is then empty.
    '''
    roots: List[float]
    f_at_zero: float
    degenerate: bool = False


def reduction_condition(p: MicroParams, omega0: float, high_t_approx: bool = False) -> float:
    '''
    Parameters:
        p : MicroParams
            Bath parameters, the qubit frequency is replaced by omega0.
        omega0 : float
            Qubit frequency to evaluate at.
        high_t_approx : bool
            Use the high temperature rates.
    Returns:
        f(omega0) = 2 gamma_zz(0) - gamma_xx(omega0) - gamma_yy(omega0).
    '''
    rates = dissipation_rates(p.with_qubit_freq(omega0), high_t_approx)
    return 2 * rates.gamma_zz0 - 2 * rates.gamma_plus


def reduction_condition_roots(p: MicroParams, high_t_approx: bool = False) -> ReductionScan:
    '''
    Finds the roots of the reduction condition by a sign scan over [0, 5 omega_c] with step omega_c/1000,
    each bracket refined by bisection to 1e-10.

    Parameters:
        p : MicroParams
            Bath parameters, its qubit frequency is ignored.
        high_t_approx : bool
            Use the high temperature rates.
    Returns:
        The ReductionScan with roots and f(0).
    '''
    if p.coupling == 0:
        return ReductionScan([], 0.0, degenerate=True)

    # The integration cap is irrelevant to the rates, it only has to stay above every scanned omega0.
    scanned = MicroParams(p.temperature, p.coupling, 0.0, p.cutoff, integration_cap=np.inf)
    grid = np.linspace(0.0, SCAN_RANGE * p.cutoff, int(SCAN_RANGE * STEPS_PER_CUTOFF) + 1)
    values = [reduction_condition(scanned, omega0, high_t_approx) for omega0 in grid]

    roots = []
    for k, (left, right) in enumerate(zip(values, values[1:])):
        if left == 0:
            roots.append(float(grid[k]))
        elif left * right < 0:
            roots.append(optimize.bisect(
                lambda omega0: reduction_condition(scanned, omega0, high_t_approx),
                grid[k], grid[k + 1], xtol=BISECTION_TOL
            ))
    if values[-1] == 0:
        roots.append(float(grid[-1]))

    log.d("reduction condition: f(0)={:.6e}, {} root(s)".format(values[0], len(roots)))
    return ReductionScan(roots, values[0])
