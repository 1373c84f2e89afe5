"""
Comparison quantities of qubit channels: volume of the image of the Bloch ball and its relative rate
of change, von Neumann entropy (natural log) and trace distance of states.
"""

__version__ = '1.0'
__all__ = [
    'ellipsoid_volume', 'ellipsoid_semi_axes', 'ellipsoid_volume_from_axes', 'volume_rate',
    'von_neumann_entropy', 'entropy_bits', 'trace_distance'
]

__author__ = 'GDPKIT'

from typing import Sequence
import math

import numpy as np
from scipy import special

from ..algebra.operators import trace_norm
from ..algebra.density_matrix import DensityMatrix
from ..channels.me2kraus import KrausSet, LocalGenerator, transfer_matrix
from ..channels.gdp_channel import ChannelShape

UNIT_BALL_VOLUME = 4 * math.pi / 3


def ellipsoid_volume(c: ChannelShape) -> float:
    '''
    Returns:
        Volume (4 pi/3) e^{tau (Omega - 2)} of the image of the Bloch ball under the GDP channel.
    '''
    return UNIT_BALL_VOLUME * math.exp(c.tau * (c.omega - 2))


def ellipsoid_semi_axes(k: KrausSet) -> np.ndarray:
    '''
    Parameters:
        k : KrausSet
            Any qubit channel.
    Returns:
        Semi-axes of the image of the Bloch ball, descending: the singular values of the block of the
        transfer matrix acting on (sx, sy, sz).
    '''
    return np.linalg.svd(transfer_matrix(k)[1:, 1:], compute_uv=False)


def ellipsoid_volume_from_axes(axes: Sequence[float]) -> float:
    return UNIT_BALL_VOLUME * float(np.prod(axes))


def volume_rate(g: LocalGenerator, t: float) -> float:
    '''
    Relative speed of the volume change, (1/V_0) dV/dt.

    Parameters:
        g : LocalGenerator
            Generator of the dynamics.
        t : float
            Physical time, >= 0.
    Returns:
        -4(2z + y) e^{-4(2z + y) t}.
    '''
    if t < 0:
        raise ValueError("time must be non negative, got {}".format(t))
    rate = 4 * (2 * g.z + g.y)
    if rate == 0:
        return 0.0
    return -rate * math.exp(-rate * t)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    '''
    Returns:
        -sum lambda ln lambda over the eigenvalues of rho, with 0 ln 0 = 0.
    '''
    values = np.clip(np.linalg.eigvalsh(rho.mat), 0.0, None)
    return float(np.sum(special.entr(values)))


def entropy_bits(s: float) -> float:
    return s / math.log(2)


def trace_distance(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    '''
    Raises:
        ValueError
            If the states have different dimensions.
    Returns:
        (1/2) ||rho - sigma||_1, within [0, 1].
    '''
    if rho.dim != sigma.dim:
        raise ValueError("dimension mismatch: {} and {}".format(rho.dim, sigma.dim))
    return 0.5 * trace_norm(rho.mat - sigma.mat)
