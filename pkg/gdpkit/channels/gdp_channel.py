"""
The generalized depolarizing (GDP) channel: generator from the microscopic bath parameters,
dimensionless shape (theta, Omega, tau), closed forms of propagator, Choi matrix and Kraus operators,
the standard depolarizing reductions and the analytic evolution of a Bloch state.

For a generator (x, y, z) the shape is theta = x/(y+z), Omega = -2z/(y+z), tau = 2(y+z)t, and the channel
rotates the Bloch vector by theta*tau around z, shrinks the equatorial plane by e^{-tau} and
the z axis by e^{tau*Omega}.
"""

__version__ = '1.0'
__all__ = [
    'ChannelShape',
    'generator_from_micro', 'standard_generator', 'shape',
    'scaled_generator', 'gdp_propagator', 'gdp_choi', 'gdp_choi_eigenvalues',
    'gdp_kraus', 'standard_kraus', 'standard_probability', 'depolarizing_kraus',
    'asymptotic_kraus', 'analytic_state'
]

__author__ = 'GDPKIT'

from dataclasses import dataclass
from typing import Optional
import math

import numpy as np

from ..algebra.operators import IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z
from ..algebra.density_matrix import DensityMatrix
from ..bath.ohmic import MicroParams, damping_rates
from .me2kraus import LocalGenerator, PropagatorMatrix, ChoiMatrix, KrausSet, kraus_from_choi
from ..utils import logger as log

# Below this |sin(theta tau)| the tan/cot closed forms are replaced by the Choi route.
SINGULAR_ANGLE_TOL = 1e-8


@dataclass(frozen=True)
class ChannelShape:
    '''
    Dimensionless parameters of the GDP channel.

    Attributes:
        theta : float
            Rotation rate around z in units of the decay, x/(y+z).
        omega : float
            Anisotropy -2z/(y+z), within [-2, 0]; -1 is the standard depolarizing channel.
        tau : float
            Dimensionless time 2(y+z)t, >= 0.
    '''
    theta: float
    omega: float
    tau: float

    def __post_init__(self):
        if self.tau < 0:
            raise ValueError("tau must be non negative, got {}".format(self.tau))
        if not -2 <= self.omega <= 0:
            raise ValueError("omega must be within [-2, 0], got {}".format(self.omega))

    def standard(self) -> "ChannelShape":
        '''
        Returns:
            The standard depolarizing shape at the same tau, theta = 0 and Omega = -1.
        '''
        return ChannelShape(0.0, -1.0, self.tau)

    @property
    def equatorial_decay(self) -> float:
        return math.exp(-self.tau)

    @property
    def polar_decay(self) -> float:
        return math.exp(self.tau * self.omega)

    @property
    def angle(self) -> float:
        return self.theta * self.tau


def generator_from_micro(p: MicroParams, high_t_approx: bool = False) -> LocalGenerator:
    '''
    Parameters:
        p : MicroParams
            Bath parameters.
        high_t_approx : bool
            Use the high temperature rates.
    Returns:
        The generator x = Delta, y = gamma_zz(0), z = gamma_xx(omega_0) = gamma_yy(omega_0).
    '''
    rates = damping_rates(p, high_t_approx)
    return LocalGenerator(rates.lamb_delta, rates.gamma_zz0, rates.gamma_plus)


def standard_generator(g: LocalGenerator) -> LocalGenerator:
    '''
    Returns:
        The standard depolarizing comparison of g: no Lamb shift, y and z replaced by their mean.
        The sum y + z, hence the tau scale, is unchanged.
    '''
    mean = (g.y + g.z) / 2
    return LocalGenerator(0.0, mean, mean)


def shape(g: LocalGenerator, t: float) -> Optional[ChannelShape]:
    '''
    Parameters:
        g : LocalGenerator
            Generator of the dynamics.
        t : float
            Physical time, >= 0.
    Raises:
        ValueError
            If t is negative.
    Returns:
        The ChannelShape, None if y + z = 0 (no dissipation, theta undefined).
    '''
    if t < 0:
        raise ValueError("time must be non negative, got {}".format(t))
    total = g.y + g.z
    if total == 0:
        return None
    return ChannelShape(g.x / total, -2 * g.z / total, 2 * total * t)


def scaled_generator(c: ChannelShape) -> np.ndarray:
    '''
    Returns:
        The dimensionless generator L' with F = e^{L' tau}, on the basis (I, sx, sy, sz)/sqrt(2).
    '''
    return np.array([
        [0.0, 0.0, 0.0, 0.0],
        [0.0, -1.0, -c.theta, 0.0],
        [0.0, c.theta, -1.0, 0.0],
        [0.0, 0.0, 0.0, c.omega]
    ])


def gdp_propagator(c: ChannelShape) -> PropagatorMatrix:
    '''
    Returns:
        Closed form of F = e^{L' tau}.
    '''
    a, b = c.equatorial_decay, c.polar_decay
    cos, sin = math.cos(c.angle), math.sin(c.angle)
    return PropagatorMatrix(np.array([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, a * cos, -a * sin, 0.0],
        [0.0, a * sin, a * cos, 0.0],
        [0.0, 0.0, 0.0, b]
    ]))


def gdp_choi(c: ChannelShape) -> ChoiMatrix:
    '''
    Returns:
        Closed form of the Choi matrix S on the basis (I, sx, sy, sz)/sqrt(2).
    '''
    a, b = c.equatorial_decay, c.polar_decay
    cos, sin = math.cos(c.angle), math.sin(c.angle)
    s = np.zeros((4, 4), dtype=complex)
    s[0, 0] = a * cos + b / 2 + 0.5
    s[0, 3] = 1j * a * sin
    s[3, 0] = -1j * a * sin
    s[1, 1] = s[2, 2] = (1 - b) / 2
    s[3, 3] = -a * cos + b / 2 + 0.5
    return ChoiMatrix(s)


def gdp_choi_eigenvalues(c: ChannelShape) -> np.ndarray:
    '''
    Returns:
        The closed form eigenvalues of gdp_choi(c), sorted descending:
        (1 + e^{tau Omega} +- 2 e^{-tau})/2 and (1 - e^{tau Omega})/2 twice.
    '''
    a, b = c.equatorial_decay, c.polar_decay
    values = np.array([(1 + b + 2 * a) / 2, (1 + b - 2 * a) / 2, (1 - b) / 2, (1 - b) / 2])
    return np.sort(values)[::-1]


def gdp_kraus(c: ChannelShape) -> KrausSet:
    '''
    Closed form Kraus operators of the GDP channel.

    Parameters:
        c : ChannelShape
            Shape with Omega strictly within (-2, 0).
    Raises:
        ValueError
            If Omega is -2 or 0.
    Returns:
        Four operators, the first two along sy and sx, the last two diagonal.
        When |sin(theta tau)| < 1e-8 the set comes from the eigendecomposition of the closed form Choi matrix.
    '''
    if not -2 < c.omega < 0:
        raise ValueError("omega must be within (-2, 0), got {}".format(c.omega))
    if abs(math.sin(c.angle)) < SINGULAR_ANGLE_TOL:
        log.v("singular rotation angle {:.3e}, kraus operators from the choi matrix".format(c.angle))
        return kraus_from_choi(gdp_choi(c), time_tag=c.tau)

    a, b = c.equatorial_decay, c.polar_decay
    flip = math.sqrt(max(1 - b, 0.0)) / 2
    lower = max(b - 2 * a + 1, 0.0)
    upper = b + 2 * a + 1
    tan = math.tan(c.angle / 2)
    cot = 1 / tan
    lower_norm = math.sqrt(lower / (tan ** 2 + 1))
    upper_norm = math.sqrt(upper / (cot ** 2 + 1))

    e1 = flip * SIGMA_Y
    e2 = flip * SIGMA_X
    e3 = np.diag([(1 - 1j * tan) / 2 * lower_norm, (-1 - 1j * tan) / 2 * lower_norm])
    e4 = np.diag([(1 + 1j * cot) / 2 * upper_norm, 1j * (cot + 1j) / 2 * upper_norm])
    return KrausSet((e1, e2, e3, e4), time_tag=c.tau)


def standard_kraus(tau: float) -> KrausSet:
    '''
    Kraus operators of the GDP channel reduced to theta = 0, Omega = -1.

    Parameters:
        tau : float
            Dimensionless time, >= 0.
    Returns:
        (1/2) sqrt(1 - e^{-tau}) times sy, sx and sz, plus -(i/2) e^{-tau/2} sqrt(3 + e^{tau}) I.
    '''
    if tau < 0:
        raise ValueError("tau must be non negative, got {}".format(tau))
    weight = math.sqrt(standard_probability(tau)) / 2
    # e^{-tau/2} sqrt(3 + e^{tau}) written without e^{tau}.
    last = -0.5j * math.sqrt(1 + 3 * math.exp(-tau))
    return KrausSet((weight * SIGMA_Y, weight * SIGMA_X, weight * SIGMA_Z, last * IDENTITY), time_tag=tau)


def standard_probability(tau: float) -> float:
    '''
    Returns:
        The depolarizing probability p = 1 - e^{-tau} of the standard channel at tau.
    '''
    return -math.expm1(-tau)


def depolarizing_kraus(p: float) -> KrausSet:
    '''
    Textbook depolarizing channel, rho -> (1 - p) rho + p I/2.

    Parameters:
        p : float
            Depolarizing probability within [0, 1].
    Raises:
        ValueError
            If p is outside [0, 1].
    Returns:
        sqrt(1 - 3p/4) I and (sqrt(p)/2) sx, sy, sz.
    '''
    if not 0 <= p <= 1:
        raise ValueError("depolarizing probability must be within [0, 1], got {}".format(p))
    weight = math.sqrt(p) / 2
    return KrausSet((math.sqrt(1 - 0.75 * p) * IDENTITY, weight * SIGMA_X, weight * SIGMA_Y, weight * SIGMA_Z))


def asymptotic_kraus() -> KrausSet:
    '''
    Returns:
        The tau -> infinity limit of the channel, mapping every state to I/2: sy/2, sx/2, i sz/2, i I/2.
    '''
    return KrausSet((SIGMA_Y / 2, SIGMA_X / 2, 0.5j * SIGMA_Z, 0.5j * IDENTITY), time_tag=math.inf)


def analytic_state(u: float, v: float, c: ChannelShape) -> DensityMatrix:
    '''
    State at tau of the evolution starting from the pure state with Bloch angles (u, v).

    Parameters:
        u : float
            Azimuth within [0, 2 pi].
        v : float
            Polar angle within [0, pi].
        c : ChannelShape
            Channel at the requested time.
    Returns:
        (1/2)[I + e^{-tau} sin v (cos(u + theta tau) sx + sin(u + theta tau) sy) + e^{tau Omega} cos v sz].
    '''
    a, b = c.equatorial_decay, c.polar_decay
    phase = u + c.angle
    mat = 0.5 * (IDENTITY
                 + a * math.sin(v) * math.cos(phase) * SIGMA_X
                 + a * math.sin(v) * math.sin(phase) * SIGMA_Y
                 + b * math.cos(v) * SIGMA_Z)
    return DensityMatrix(mat)
