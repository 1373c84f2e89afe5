"""
Lamb shift of the qubit frequency, a principal value integral over the thermal weight of the bath:

    Delta = omega_0 * P.V. int_0^{omega_max} J(w) <n(w)> / (omega_0^2 - w^2) dw

Two independent schemes are provided, lamb_shift (excised symmetric window, extrapolated over the
window width) and lamb_shift_subtracted (singularity subtraction), so each can check the other.
"""

__version__ = '1.0'
__all__ = [
    'lamb_shift', 'lamb_shift_subtracted', 'window_estimate'
]

__author__ = 'GDPKIT'

from typing import Callable
import math

from scipy import integrate

from .ohmic import MicroParams, thermal_weight
from ..utils import logger as log

# Window half widths, relative to omega_0, of the first extrapolation pass.
WINDOWS = (1e-2, 5e-3, 2.5e-3)
CONVERGENCE_TOL = 1e-8
MAX_REFINEMENTS = 4

QUAD_OPTIONS = dict(epsabs=1e-14, epsrel=1e-12, limit=400)


def _unit_weight(p: MicroParams) -> Callable[[float], float]:
    # alpha is factored out of the integral, the shift is exactly linear in it.
    unit = p.with_coupling(1.0)
    return lambda omega: thermal_weight(omega, unit)


def window_estimate(p: MicroParams, eps: float) -> float:
    '''
    Principal value integral with the window (omega_0 - eps, omega_0 + eps) excised and the two halves
    of the window paired: int_0^eps [g(omega_0 - s) - g(omega_0 + s)] / s ds, g(w) = J(w)<n(w)>/(omega_0 + w).
    The paired integrand is regular, so the estimate is exact up to quadrature error for every eps.

    Parameters:
        p : MicroParams
            Bath parameters, omega_0 > 0.
        eps : float
            Absolute half width of the window, 0 < eps < omega_0.
    Returns:
        The integral for unit coupling, without the omega_0 prefactor.
    '''
    omega0 = p.qubit_freq
    cap = p.integration_cap
    if not 0 < eps < omega0:
        raise ValueError("window half width must be within (0, {}), got {}".format(omega0, eps))
    weight = _unit_weight(p)

    def g(omega):
        return weight(omega) / (omega0 + omega)

    def outer(omega):
        return g(omega) / (omega0 - omega)

    def paired(s):
        return (g(omega0 - s) - g(omega0 + s)) / s

    below, _ = integrate.quad(outer, 0.0, omega0 - eps, **QUAD_OPTIONS)
    above, _ = integrate.quad(outer, omega0 + eps, cap, **QUAD_OPTIONS)
    window, _ = integrate.quad(paired, 0.0, eps, **QUAD_OPTIONS)
    return below + above + window


def _richardson(coarse: float, fine: float) -> float:
    # Halved window, error of order eps^2.
    return (4 * fine - coarse) / 3


def lamb_shift(p: MicroParams) -> float:
    '''
    Lamb shift through the symmetric window scheme, extrapolated to a vanishing window.
    The window halves until two successive extrapolated estimates agree within 1e-8 relative.

    Parameters:
        p : MicroParams
            Bath parameters.
    Raises:
        RuntimeError
            If the estimates still disagree after the last refinement, the message lists all of them.
    Returns:
        Delta, 0 for omega_0 = 0 or alpha = 0.
    '''
    if p.qubit_freq == 0 or p.coupling == 0:
        return 0.0
    widths = [w * p.qubit_freq for w in WINDOWS]
    raw = [window_estimate(p, eps) for eps in widths]
    estimates = [_richardson(a, b) for a, b in zip(raw, raw[1:])]
    for refinement in range(MAX_REFINEMENTS + 1):
        previous, last = estimates[-2], estimates[-1]
        if abs(last - previous) <= CONVERGENCE_TOL * max(abs(last), abs(previous)):
            return p.coupling * p.qubit_freq * last
        if refinement == MAX_REFINEMENTS:
            break
        log.d("lamb shift not converged at eps={:.3e}: {!r}".format(widths[-1], estimates))
        widths.append(widths[-1] / 2)
        raw.append(window_estimate(p, widths[-1]))
        estimates.append(_richardson(raw[-2], raw[-1]))
    raise RuntimeError("lamb shift quadrature did not converge, windows {} gave estimates {}".format(
        widths, [p.coupling * p.qubit_freq * x for x in estimates]))


def lamb_shift_subtracted(p: MicroParams) -> float:
    '''
    Lamb shift through singularity subtraction:
    P.V. int_0^W g(w)/(omega_0 - w) dw = int_0^W [g(w) - g(omega_0)]/(omega_0 - w) dw + g(omega_0) ln(omega_0/(W - omega_0)).

    Parameters:
        p : MicroParams
            Bath parameters.
    Returns:
        Delta, 0 for omega_0 = 0 or alpha = 0.
    '''
    if p.qubit_freq == 0 or p.coupling == 0:
        return 0.0
    omega0 = p.qubit_freq
    cap = p.integration_cap
    weight = _unit_weight(p)

    def g(omega):
        return weight(omega) / (omega0 + omega)

    g0 = g(omega0)

    def regular(omega):
        if omega == omega0:
            return 0.0
        return (g(omega) - g0) / (omega0 - omega)

    body, _ = integrate.quad(regular, 0.0, cap, points=[omega0], **QUAD_OPTIONS)
    return p.coupling * omega0 * (body + g0 * math.log(omega0 / (cap - omega0)))

