"""
Wootters concurrence and entanglement of formation of two-qubit states.
"""

__version__ = '1.0'
__all__ = [
    'SPIN_FLIP', 'spin_flip', 'spin_flip_eigenvalues', 'concurrence',
    'binary_entropy', 'entanglement_of_formation'
]

__author__ = 'GDPKIT'

import math

import numpy as np
from scipy import special

from ..algebra.operators import SIGMA_Y, floor_eigenvalues, herm_eig, kron, psd_sqrt
from ..algebra.density_matrix import DensityMatrix

SPIN_FLIP = kron(SIGMA_Y, SIGMA_Y)
SPIN_FLIP.setflags(write=False)


def spin_flip(rho: DensityMatrix) -> np.ndarray:
    '''
    Returns:
        (sy x sy) rho* (sy x sy), conjugation taken entry-wise in the product basis.
    '''
    if rho.dim != 4:
        raise ValueError("concurrence is defined for qubit pairs, got dimension {}".format(rho.dim))
    return SPIN_FLIP @ np.conj(rho.mat) @ SPIN_FLIP


def spin_flip_eigenvalues(rho: DensityMatrix) -> np.ndarray:
    '''
    Eigenvalues of rho (sy x sy) rho* (sy x sy), obtained from the similar Hermitian matrix
    sqrt(rho) rho~ sqrt(rho).

    Raises:
        ValueError
            If an eigenvalue is below -1e-8.
    Returns:
        The four eigenvalues, descending, round-off ones set to 0.
    '''
    root = psd_sqrt(rho.mat)
    product = root @ spin_flip(rho) @ root
    values, _ = herm_eig((product + np.conj(product.T)) / 2)
    return floor_eigenvalues(values)


def concurrence(rho: DensityMatrix) -> float:
    '''
    Returns:
        C = max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)) within [0, 1].
    '''
    roots = np.sqrt(spin_flip_eigenvalues(rho))
    return float(min(1.0, max(0.0, roots[0] - roots[1] - roots[2] - roots[3])))


def binary_entropy(x: float) -> float:
    '''
    Returns:
        H(x) = -x log2 x - (1 - x) log2(1 - x).
    '''
    return float((special.entr(x) + special.entr(1 - x)) / math.log(2))


def entanglement_of_formation(c: float) -> float:
    '''
    Parameters:
        c : float
            Concurrence within [0, 1].
    Raises:
        ValueError
            If c is outside [0, 1].
    Returns:
        H((1 + sqrt(1 - c^2))/2).
    '''
    if not 0 <= c <= 1:
        raise ValueError("concurrence must be within [0, 1], got {}".format(c))
    return binary_entropy((1 + math.sqrt(1 - c * c)) / 2)
