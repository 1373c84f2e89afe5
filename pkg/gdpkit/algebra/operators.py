"""
Dense complex kernels for qubit (2x2) and qubit-pair (4x4) operators.
Every function is pure: inputs are never modified and no state is shared.
"""

__version__ = '1.0'
__all__ = [
    'IDENTITY', 'SIGMA_X', 'SIGMA_Y', 'SIGMA_Z', 'SIGMA_PLUS', 'SIGMA_MINUS',
    'PAULI', 'HERM_BASIS',
    'check_dim', 'dagger', 'is_hermitian',
    'hs_inner', 'herm_eig', 'floor_eigenvalues', 'mat_exp', 'psd_sqrt', 'trace_norm', 'kron'
]

__author__ = 'GDPKIT'

from typing import Tuple
import numpy as np
import scipy.linalg

ALLOWED_DIMS = (2, 4)
HERMITIAN_TOL = 1e-10
# Eigenvalues below -PSD_ERROR_TOL are an error, the ones in between are clipped to 0.
PSD_ERROR_TOL = 1e-8
# Eigenvalues below EIG_REL_FLOOR times the largest one are round-off and count as 0.
EIG_REL_FLOOR = 1e-14
# Beyond this 1-norm of m*s the exponential overflows double precision.
EXP_NORM_LIMIT = 700.0

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
SIGMA_PLUS = (SIGMA_X + 1j * SIGMA_Y) / 2
SIGMA_MINUS = (SIGMA_X - 1j * SIGMA_Y) / 2

PAULI = (IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z)
# Hilbert-Schmidt orthonormal basis of the Hermitian qubit operators, ordered (I, x, y, z).
HERM_BASIS = tuple(p / np.sqrt(2) for p in PAULI)

for _matrix in PAULI + HERM_BASIS:
    _matrix.setflags(write=False)


def check_dim(m: np.ndarray) -> int:
    '''
    Parameters:
        m : np.ndarray
            Matrix to inspect.
    Raises:
        ValueError
            If m is not a square matrix of dimension 2 or 4.
    Returns:
        The dimension of m.
    '''
    shape = np.shape(m)
    if len(shape) != 2 or shape[0] != shape[1] or shape[0] not in ALLOWED_DIMS:
        raise ValueError("expected a 2x2 or 4x4 matrix, got shape {}".format(shape))
    return shape[0]


def dagger(m: np.ndarray) -> np.ndarray:
    '''
    Returns:
        The conjugate transpose of m.
    '''
    return np.conj(np.transpose(m))


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    '''
    Returns:
        True if the largest entry of m - m^dagger is within tol.
    '''
    return float(np.max(np.abs(m - dagger(m)))) <= tol


def hs_inner(a: np.ndarray, b: np.ndarray) -> complex:
    '''
    Hilbert-Schmidt inner product.

    Parameters:
        a, b : np.ndarray
            Matrices of equal dimension.
    Raises:
        ValueError
            If the dimensions differ or are not supported.
    Returns:
        tr(a^dagger b).
    '''
    if check_dim(a) != check_dim(b):
        raise ValueError("dimension mismatch: {} and {}".format(np.shape(a), np.shape(b)))
    return complex(np.trace(dagger(a) @ b))


def herm_eig(m: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    '''
    Diagonalizes a Hermitian matrix with a reproducible eigenvector phase.

    Parameters:
        m : np.ndarray
            Hermitian matrix (within 1e-10).
    Raises:
        ValueError
            If m is not Hermitian or has an unsupported dimension.
    Returns:
        The real eigenvalues sorted descending and the matrix whose columns are the matching
        unit eigenvectors. Each eigenvector has its largest-magnitude component real and positive
        (the first one in case of ties).
    '''
    check_dim(m)
    if not is_hermitian(m):
        raise ValueError("matrix is not hermitian, max deviation {:.3e}".format(
            float(np.max(np.abs(m - dagger(m))))))
    values, vectors = np.linalg.eigh((m + dagger(m)) / 2)
    values = values[::-1]
    vectors = vectors[:, ::-1].astype(complex)
    for column in range(vectors.shape[1]):
        pivot = vectors[np.argmax(np.abs(vectors[:, column])), column]
        vectors[:, column] *= np.conj(pivot) / np.abs(pivot)
    return values, vectors


def mat_exp(m: np.ndarray, s: float) -> np.ndarray:
    '''
    Matrix exponential e^{m s} through scaling and squaring with a Pade core.

    Parameters:
        m : np.ndarray
            Square matrix, real or complex.
        s : float
            Scalar multiplying m.
    Raises:
        OverflowError
            If the 1-norm of m*s exceeds 700.
    Returns:
        e^{m s}, real if m is real.
    '''
    scaled = np.asarray(m) * s
    norm = np.linalg.norm(scaled, 1)
    if norm > EXP_NORM_LIMIT:
        raise OverflowError("matrix exponential out of range, norm of m*s is {:.3e}".format(norm))
    return scipy.linalg.expm(scaled)


def floor_eigenvalues(values: np.ndarray) -> np.ndarray:
    '''
    Parameters:
        values : np.ndarray
            Eigenvalues of a PSD matrix, descending.
    Raises:
        ValueError
            If an eigenvalue is below -1e-8.
    Returns:
        A copy of values with everything below EIG_REL_FLOOR * values[0] set to 0.
    '''
    if values[-1] < -PSD_ERROR_TOL:
        raise ValueError("matrix is not positive semidefinite, smallest eigenvalue {:.3e}".format(values[-1]))
    floor = EIG_REL_FLOOR * max(values[0], 0.0)
    return np.where(values > floor, values, 0.0)


def psd_sqrt(m: np.ndarray) -> np.ndarray:
    '''
    Principal square root of a positive semidefinite matrix.

    Parameters:
        m : np.ndarray
            Hermitian PSD matrix, round-off eigenvalues are set to 0, see floor_eigenvalues.
    Raises:
        ValueError
            If an eigenvalue is below -1e-8.
    Returns:
        The Hermitian PSD r with r r = m.
    '''
    values, vectors = herm_eig(m)
    roots = np.sqrt(floor_eigenvalues(values))
    return (vectors * roots) @ dagger(vectors)


def trace_norm(m: np.ndarray) -> float:
    '''
    Returns:
        The sum of the singular values of m, tr sqrt(m^dagger m).
    '''
    return float(np.sum(np.linalg.svd(m, compute_uv=False)))


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    '''
    Kronecker product of two qubit operators, qubit 1 (a) is the left factor.

    Raises:
        ValueError
            If a or b is not 2x2.
    Returns:
        The 4x4 operator a (x) b in the |00>, |01>, |10>, |11> ordering.
    '''
    if check_dim(a) != 2 or check_dim(b) != 2:
        raise ValueError("kron expects two 2x2 operators, got {} and {}".format(np.shape(a), np.shape(b)))
    return np.kron(a, b)
