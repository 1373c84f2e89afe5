from dataclasses import dataclass
from typing import Sequence, Union
import math

import numpy as np

from ..algebra.operators import IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z
from ..algebra.density_matrix import DensityMatrix

# Accepted excess of the Bloch vector norm over 1.
NORM_TOL = 1e-10


@dataclass(frozen=True)
class BlochVector:
    '''
    Real coordinates of a qubit state rho = (I + n.sigma)/2.

    Attributes:
        n : np.ndarray
            (n_x, n_y, n_z), norm at most 1.
    '''
    n: np.ndarray

    def __post_init__(self):
        n = np.array(self.n, dtype=float).reshape(-1)
        if n.shape != (3,):
            raise ValueError("a bloch vector has three components, got {}".format(n.shape))
        norm = float(np.linalg.norm(n))
        if norm > 1 + NORM_TOL:
            raise ValueError("bloch vector norm {:.12g} exceeds 1".format(norm))
        n.setflags(write=False)
        object.__setattr__(self, "n", n)

    @staticmethod
    def from_angles(u: float, v: float) -> "BlochVector":
        '''
        Parameters:
            u : float
                Azimuth.
            v : float
                Polar angle measured from +z.
        Returns:
            The pure state direction (sin v cos u, sin v sin u, cos v).
        '''
        return BlochVector((math.sin(v) * math.cos(u), math.sin(v) * math.sin(u), math.cos(v)))

    def norm(self) -> float:
        return float(np.linalg.norm(self.n))


def bloch_to_density(b: Union[BlochVector, Sequence[float]]) -> DensityMatrix:
    '''
    Raises:
        ValueError
            If the vector is longer than 1.
    Returns:
        rho = (I + n_x sx + n_y sy + n_z sz)/2.
    '''
    if not isinstance(b, BlochVector):
        b = BlochVector(b)
    nx, ny, nz = b.n
    return DensityMatrix(0.5 * (IDENTITY + nx * SIGMA_X + ny * SIGMA_Y + nz * SIGMA_Z))


def density_to_bloch(rho: DensityMatrix) -> BlochVector:
    '''
    Raises:
        ValueError
            If rho is not a qubit state.
    Returns:
        n_k = tr(rho sigma_k).
    '''
    if rho.dim != 2:
        raise ValueError("bloch vectors describe single qubits, got dimension {}".format(rho.dim))
    return BlochVector([float(np.real(np.trace(rho.mat @ sigma))) for sigma in (SIGMA_X, SIGMA_Y, SIGMA_Z)])
