"""
Ohmic thermal bath of the depolarizing model: spectral density, Bose occupation and the damping rates
entering the master equation. Units hbar = k_B = 1, every parameter is an angular frequency.
"""

__version__ = '1.0'
__all__ = [
    'MicroParams', 'DampingRates',
    'ohmic_density', 'bose_occupation', 'thermal_weight',
    'dissipation_rates', 'damping_rates'
]

__author__ = 'GDPKIT'

from dataclasses import dataclass, replace
from typing import List, Optional
import math

# Regime thresholds, violations are reported as warnings only.
MARKOV_RATIO_LIMIT = 0.2
HIGH_TEMPERATURE_RATIO = 10.0
# Default integration cap of the Lamb shift, in units of the cutoff.
INTEGRATION_CAP_FACTOR = 20.0


@dataclass(frozen=True)
class MicroParams:
    '''
    Microscopic parameters of the qubit and its bath.

    Attributes:
        temperature : float
            Bath temperature T > 0.
        coupling : float
            Weak coupling constant alpha >= 0 (0 decouples the bath).
        qubit_freq : float
            Qubit frequency omega_0 >= 0.
        cutoff : float
            Cutoff frequency omega_c > 0 of the Ohmic density.
        integration_cap : float
            Upper limit omega_max of the Lamb shift integral, 20 omega_c when None.
    '''
    temperature: float
    coupling: float
    qubit_freq: float
    cutoff: float
    integration_cap: Optional[float] = None

    def __post_init__(self):
        if not self.temperature > 0:
            raise ValueError("temperature must be positive, got {}".format(self.temperature))
        if self.coupling < 0:
            raise ValueError("coupling must be non negative, got {}".format(self.coupling))
        if self.qubit_freq < 0:
            raise ValueError("qubit frequency must be non negative, got {}".format(self.qubit_freq))
        if not self.cutoff > 0:
            raise ValueError("cutoff frequency must be positive, got {}".format(self.cutoff))
        if self.integration_cap is None:
            object.__setattr__(self, "integration_cap", INTEGRATION_CAP_FACTOR * self.cutoff)
        elif not self.integration_cap > self.qubit_freq:
            raise ValueError("integration cap {} must exceed the qubit frequency {}".format(
                self.integration_cap, self.qubit_freq))

    def with_coupling(self, coupling: float) -> "MicroParams":
        return replace(self, coupling=coupling)

    def with_qubit_freq(self, qubit_freq: float) -> "MicroParams":
        # The cap default follows the cutoff, an explicit cap is kept.
        return replace(self, qubit_freq=qubit_freq)

    def regime_warnings(self) -> List[str]:
        '''
        Checks the conditions under which the Markovian master equation is justified.

        Returns:
            A list of human readable warnings, empty when omega_0/omega_c < 0.2 and T/omega_0 > 10.
        '''
        warnings = []
        ratio = self.qubit_freq / self.cutoff
        if ratio >= MARKOV_RATIO_LIMIT:
            warnings.append("markovianity condition omega0/omegac << 1 not met: omega0/omegac = {:.4g}".format(ratio))
        if self.qubit_freq > 0 and self.temperature / self.qubit_freq <= HIGH_TEMPERATURE_RATIO:
            warnings.append("high temperature condition T/omega0 >> 1 not met: T/omega0 = {:.4g}".format(
                self.temperature / self.qubit_freq))
        return warnings


@dataclass(frozen=True)
class DampingRates:
    '''
    Rates of the depolarizing master equation.

    Attributes:
        gamma_zz0 : float
            Dephasing rate gamma_zz(0).
        gamma_plus : float
            gamma_xx(omega_0) = gamma_yy(omega_0), emission side.
        gamma_minus : float
            gamma_xx(-omega_0) = gamma_yy(-omega_0), absorption side.
        lamb_delta : float
            Lamb shift Delta, coefficient of sz in the effective Hamiltonian.
    '''
    gamma_zz0: float
    gamma_plus: float
    gamma_minus: float
    lamb_delta: float = 0.0


def ohmic_density(omega: float, p: MicroParams) -> float:
    '''
    Parameters:
        omega : float
            Frequency >= 0.
        p : MicroParams
            Bath parameters.
    Raises:
        ValueError
            If omega is negative.
    Returns:
        J(omega) = alpha omega e^{-omega/omega_c}.
    '''
    if omega < 0:
        raise ValueError("spectral density is defined for omega >= 0, got {}".format(omega))
    return p.coupling * omega * math.exp(-omega / p.cutoff)


def bose_occupation(omega: float, temperature: float) -> float:
    '''
    Parameters:
        omega : float
            Frequency > 0.
        temperature : float
            Temperature > 0.
    Raises:
        ValueError
            If omega or temperature is not positive.
    Returns:
        <n(omega)> = 1 / (e^{omega/T} - 1).
    '''
    if omega <= 0:
        raise ValueError("bose occupation diverges for omega <= 0, got {}".format(omega))
    if temperature <= 0:
        raise ValueError("temperature must be positive, got {}".format(temperature))
    x = omega / temperature
    # Same as 1 / (e^x - 1), without overflowing for x > 709.
    return math.exp(-x) / -math.expm1(-x)


def thermal_weight(omega: float, p: MicroParams) -> float:
    '''
    Product J(omega) <n(omega)>, continued to its limit alpha T at omega = 0.

    Parameters:
        omega : float
            Frequency >= 0.
        p : MicroParams
            Bath parameters.
    Returns:
        alpha e^{-omega/omega_c} omega / (e^{omega/T} - 1).
    '''
    if omega < 0:
        raise ValueError("thermal weight is defined for omega >= 0, got {}".format(omega))
    if omega == 0:
        return p.coupling * p.temperature
    x = omega / p.temperature
    return p.coupling * omega * math.exp(-omega / p.cutoff - x) / -math.expm1(-x)


def dissipation_rates(p: MicroParams, high_t_approx: bool = False) -> DampingRates:
    '''
    The damping rates without the Lamb shift (lamb_delta left at 0).

    Parameters:
        p : MicroParams
            Bath parameters.
        high_t_approx : bool
            Replace both gamma(+-omega_0) by (pi/2) J(omega_0) <n(omega_0)>.
    Returns:
        gamma_zz0 = 2 pi lim_{w->0} J(w)<n(w)> = 2 pi alpha T,
        gamma_plus = (pi/2) J(omega_0) (<n> + 1), gamma_minus = (pi/2) J(omega_0) <n>,
        with the omega_0 -> 0 limits used for a resonant-free qubit.
    '''
    gamma_zz0 = 2 * math.pi * thermal_weight(0.0, p)
    gamma_minus = math.pi / 2 * thermal_weight(p.qubit_freq, p)
    if high_t_approx:
        gamma_plus = gamma_minus
    else:
        gamma_plus = gamma_minus + math.pi / 2 * ohmic_density(p.qubit_freq, p)
    return DampingRates(gamma_zz0, gamma_plus, gamma_minus)


def damping_rates(p: MicroParams, high_t_approx: bool = False) -> DampingRates:
    '''
    Parameters:
        p : MicroParams
            Bath parameters.
        high_t_approx : bool
            See dissipation_rates.
    Raises:
        RuntimeError
            If the Lamb shift quadrature does not converge.
    Returns:
        The rates of dissipation_rates together with the Lamb shift.
    '''
    from .lamb_shift import lamb_shift
    return replace(dissipation_rates(p, high_t_approx), lamb_delta=lamb_shift(p))
