from dataclasses import dataclass
from typing import Sequence
import numpy as np

from .operators import check_dim
from ..validation.validation import density_matrix_validator

_VALIDATOR = density_matrix_validator()


@dataclass(frozen=True)
class DensityMatrix:
    '''
    Qubit (2x2) or qubit-pair (4x4) state: hermitian, unit trace, positive semidefinite.

    Attributes:
        mat : np.ndarray
            The complex matrix, stored read-only.
    '''
    mat: np.ndarray

    def __post_init__(self):
        '''
        Raises:
            ValueError
                If mat has an unsupported shape or breaks one of the invariants
                (hermitian within 1e-12, |tr - 1| < 1e-12, eigenvalues >= -1e-10).
        '''
        mat = np.array(self.mat, dtype=complex)
        check_dim(mat)
        failed = _VALIDATOR.failures(mat)
        if failed:
            raise ValueError("not a density matrix, failed checks: {}".format(", ".join(failed)))
        mat.setflags(write=False)
        object.__setattr__(self, "mat", mat)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    @staticmethod
    def from_ket(ket: Sequence[complex], tol: float = 1e-10) -> "DensityMatrix":
        '''
        Builds the pure state |psi><psi|.

        Parameters:
            ket : Sequence[complex]
                State vector of length 2 or 4.
            tol : float
                Accepted deviation of the norm from 1.
        Raises:
            ValueError
                If the vector is not normalized within tol.
        '''
        psi = np.asarray(ket, dtype=complex).reshape(-1)
        norm = np.linalg.norm(psi)
        if abs(norm - 1) > tol:
            raise ValueError("state vector is not normalized, norm {:.12g}".format(norm))
        return DensityMatrix(np.outer(psi, np.conj(psi)))

    @staticmethod
    def maximally_mixed(dim: int = 2) -> "DensityMatrix":
        return DensityMatrix(np.eye(dim, dtype=complex) / dim)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DensityMatrix):
            return NotImplemented
        return self.mat.shape == other.mat.shape and bool(np.array_equal(self.mat, other.mat))

    def __hash__(self):
        return hash(self.mat.tobytes())
