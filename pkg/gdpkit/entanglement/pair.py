"""
Two qubits under independent local channels. Qubit 1 is the left tensor factor and the product basis
is ordered |00>, |01>, |10>, |11>.
"""

__version__ = '1.0'
__all__ = [
    'QubitHamiltonian', 'PairState', 'BELL_PHI_PLUS',
    'schrodinger_dress', 'evolve_pair'
]

__author__ = 'GDPKIT'

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..algebra.operators import SIGMA_Z, dagger, kron, mat_exp
from ..algebra.density_matrix import DensityMatrix
from ..channels.me2kraus import KrausSet, COMPLETENESS_TOL
from ..validation.validation import make_check_completeness

BELL_PHI_PLUS = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
BELL_PHI_PLUS.setflags(write=False)

_check_complete = make_check_completeness(COMPLETENESS_TOL)


@dataclass(frozen=True)
class QubitHamiltonian:
    '''
    Free Hamiltonian H_q = (omega/2) sz of one qubit.

    Attributes:
        freq : float
            omega, angular frequency.
    '''
    freq: float

    def matrix(self) -> np.ndarray:
        return 0.5 * self.freq * SIGMA_Z

    def unitary(self, t: float) -> np.ndarray:
        '''
        Returns:
            U(t) = e^{-i H_q t}.
        '''
        return mat_exp(-1j * self.matrix(), t)


@dataclass(frozen=True, eq=False)
class PairState(DensityMatrix):
    '''
    State of a qubit pair, a 4x4 DensityMatrix.
    '''

    def __post_init__(self):
        super().__post_init__()
        if self.dim != 4:
            raise ValueError("a pair state is 4x4, got dimension {}".format(self.dim))


def schrodinger_dress(k: KrausSet, h: QubitHamiltonian, t: float) -> KrausSet:
    '''
    Moves an interaction picture Kraus set to the Schrodinger picture.

    Parameters:
        k : KrausSet
            Interaction picture set.
        h : QubitHamiltonian
            Free Hamiltonian of the qubit.
        t : float
            Time the set refers to.
    Returns:
        The set U(t) E_i, complete whenever k is.
    '''
    u = h.unitary(t)
    return KrausSet(tuple(u @ op for op in k.ops), k.time_tag)


def evolve_pair(psi0: Sequence[complex], k1: KrausSet, k2: KrausSet) -> PairState:
    '''
    Applies independent channels to the two qubits of a pure initial state.

    Parameters:
        psi0 : Sequence[complex]
            Normalized 4 component state vector.
        k1, k2 : KrausSet
            Channels of qubit 1 and qubit 2.
    Raises:
        ValueError
            If psi0 is not normalized within 1e-10 or a Kraus set is not complete within 1e-8.
    Returns:
        sum_{i,j} (A_i x B_j) |psi0><psi0| (A_i x B_j)^dagger.
    '''
    for k in (k1, k2):
        if not _check_complete(k.ops):
            raise ValueError("invalid kraus set, completeness error {:.3e}".format(k.completeness_error()))
    rho = DensityMatrix.from_ket(psi0).mat
    if rho.shape != (4, 4):
        raise ValueError("a pair state vector has 4 components, got {}".format(rho.shape[0]))
    out = np.zeros((4, 4), dtype=complex)
    for a in k1.ops:
        for b in k2.ops:
            op = kron(a, b)
            out += op @ rho @ dagger(op)
    return PairState((out + dagger(out)) / 2)
