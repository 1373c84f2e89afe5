"""
From a local-in-time qubit generator to a Kraus decomposition:
generator -> matrix L on the Hermitian basis -> propagator F = e^{Lt} -> Choi matrix S -> Kraus set.
Channels are only ever compared through their action on the operator basis, never
Kraus operator by Kraus operator, since a Kraus set is defined up to a unitary mixing.
"""

__version__ = '1.0'
__all__ = [
    'LocalGenerator', 'PropagatorMatrix', 'ChoiMatrix', 'KrausSet',
    'generator_matrix', 'propagator', 'choi', 'kraus_from_choi',
    'apply_channel', 'apply_to_operator', 'transfer_matrix', 'channel_action_distance'
]

__author__ = 'GDPKIT'

from dataclasses import dataclass
from typing import Optional, Tuple, Union
import numpy as np

from ..algebra.operators import (HERM_BASIS, SIGMA_X, SIGMA_Y, SIGMA_Z, IDENTITY, dagger, herm_eig, mat_exp,
                                 PSD_ERROR_TOL)
from ..algebra.density_matrix import DensityMatrix
from ..validation.validation import make_check_first_row, make_check_completeness, make_check_hermitian

# Choi weights below this are dropped from the Kraus set.
KRAUS_WEIGHT_CUTOFF = 1e-14
# Kraus sets further than this from completeness are rejected by apply_channel.
COMPLETENESS_TOL = 1e-8

_BASIS = np.array(HERM_BASIS)
# _CHOI_TENSOR[r, n, s, m] = tr(G_r G_n^dagger G_s G_m)
_CHOI_TENSOR = np.einsum("rab,nbc,scd,mda->rnsm", _BASIS, np.conj(np.transpose(_BASIS, (0, 2, 1))), _BASIS, _BASIS)

_check_first_row = make_check_first_row(1e-12)
_check_complete = make_check_completeness(COMPLETENESS_TOL)
_check_hermitian = make_check_hermitian(1e-12)


@dataclass(frozen=True)
class LocalGenerator:
    '''
    Lindblad generator of a qubit:
    d rho/dt = -i x [sz, rho] + y (sz rho sz - rho) + z (sx rho sx - rho) + z (sy rho sy - rho).

    Attributes:
        x : float
            Coefficient of the sz commutator (Lamb shift), frequency units.
        y : float
            sz dissipation rate, >= 0.
        z : float
            sx and sy dissipation rate, >= 0.
    '''
    x: float
    y: float
    z: float

    def __post_init__(self):
        if self.y < 0 or self.z < 0:
            raise ValueError("dissipation rates must be non negative, got y={} z={}".format(self.y, self.z))

    def apply(self, rho: np.ndarray) -> np.ndarray:
        '''
        Parameters:
            rho : np.ndarray
                Any 2x2 operator.
        Returns:
            The time derivative prescribed by the generator.
        '''
        rho = np.asarray(rho, dtype=complex)
        return (-1j * self.x * (SIGMA_Z @ rho - rho @ SIGMA_Z)
                + self.y * (SIGMA_Z @ rho @ SIGMA_Z - rho)
                + self.z * (SIGMA_X @ rho @ SIGMA_X - rho)
                + self.z * (SIGMA_Y @ rho @ SIGMA_Y - rho))

    def is_null(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0


@dataclass(frozen=True)
class PropagatorMatrix:
    '''
    Real 4x4 matrix F of a trace preserving qubit map acting on the coordinates in the Hermitian basis.

    Attributes:
        f : np.ndarray
            The matrix, first row (1, 0, 0, 0).
    '''
    f: np.ndarray

    def __post_init__(self):
        f = np.real_if_close(np.asarray(self.f), tol=1000)
        if np.iscomplexobj(f):
            raise ValueError(
                "propagator must be real, max imaginary part {:.3e}".format(float(np.max(np.abs(np.imag(f))))))
        f = np.array(f, dtype=float)
        if f.shape != (4, 4):
            raise ValueError("propagator must be 4x4, got shape {}".format(f.shape))
        if not _check_first_row(f):
            raise ValueError("propagator is not trace preserving, first row {}".format(f[0]))
        f.setflags(write=False)
        object.__setattr__(self, "f", f)


@dataclass(frozen=True)
class ChoiMatrix:
    '''
    Choi matrix S of a qubit map in the Hermitian basis: phi(rho) = sum_nm S_nm G_n rho G_m^dagger.

    Attributes:
        s : np.ndarray
            Hermitian 4x4 matrix with trace 2.
    '''
    s: np.ndarray

    def __post_init__(self):
        s = np.array(self.s, dtype=complex)
        if s.shape != (4, 4):
            raise ValueError("choi matrix must be 4x4, got shape {}".format(s.shape))
        if not _check_hermitian(s):
            raise ValueError("choi matrix is not hermitian")
        if abs(np.trace(s) - 2) > 1e-10:
            raise ValueError("choi matrix trace is {} instead of 2".format(np.trace(s)))
        s.setflags(write=False)
        object.__setattr__(self, "s", s)


@dataclass(frozen=True)
class KrausSet:
    '''
    Ordered Kraus operators of a qubit channel. The order carries no meaning.

    Attributes:
        ops : Tuple[np.ndarray]
            2x2 complex matrices.
        time_tag : float
            Time (or dimensionless tau) the set was built for, None if not time dependent.
    '''
    ops: Tuple[np.ndarray, ...]
    time_tag: Optional[float] = None

    def __post_init__(self):
        ops = tuple(np.array(op, dtype=complex) for op in self.ops)
        if not ops:
            raise ValueError("a kraus set needs at least one operator")
        for op in ops:
            if op.shape != ops[0].shape or op.shape[0] != op.shape[1]:
                raise ValueError("kraus operators must be square and of equal shape, got {}".format(op.shape))
            op.setflags(write=False)
        object.__setattr__(self, "ops", ops)

    def __len__(self) -> int:
        return len(self.ops)

    def completeness_error(self) -> float:
        '''
        Returns:
            The largest entry of sum_k E_k^dagger E_k - I.
        '''
        total = sum(dagger(op) @ op for op in self.ops)
        return float(np.max(np.abs(total - np.eye(total.shape[0]))))

    def is_complete(self, tol: float = 1e-10) -> bool:
        return self.completeness_error() < tol

    @staticmethod
    def identity(time_tag: Optional[float] = None) -> "KrausSet":
        return KrausSet((IDENTITY,), time_tag)


def generator_matrix(g: LocalGenerator) -> np.ndarray:
    '''
    Matrix of the generator in the Hermitian basis, L_kl = tr[G_k Lambda(G_l)].

    Parameters:
        g : LocalGenerator
            Generator to represent.
    Returns:
        Real 4x4 matrix. For the basis (I, sx, sy, sz)/sqrt(2) it is
        [[0, 0, 0, 0], [0, -2(y+z), -2x, 0], [0, 2x, -2(y+z), 0], [0, 0, 0, -4z]].
    '''
    images = [g.apply(basis_op) for basis_op in HERM_BASIS]
    matrix = np.array([[np.trace(gk @ image) for image in images] for gk in HERM_BASIS])
    return np.real(matrix)


def propagator(l: np.ndarray, t: float) -> PropagatorMatrix:
    '''
    Parameters:
        l : np.ndarray
            Time independent generator matrix from generator_matrix.
        t : float
            Elapsed time, >= 0.
    Raises:
        ValueError
            If t is negative.
        OverflowError
            If |l t| is out of the exponential range.
    Returns:
        F = e^{l t}.
    '''
    if t < 0:
        raise ValueError("propagation time must be non negative, got {}".format(t))
    return PropagatorMatrix(mat_exp(l, t))


def choi(f: PropagatorMatrix) -> ChoiMatrix:
    '''
    Parameters:
        f : PropagatorMatrix
            Map on the basis coordinates.
    Returns:
        S_nm = sum_{s,r} F_sr tr[G_r G_n^dagger G_s G_m].
    '''
    s = np.einsum("sr,rnsm->nm", f.f, _CHOI_TENSOR)
    # Remove the rounding asymmetry before the hermiticity check.
    return ChoiMatrix((s + dagger(s)) / 2)


def kraus_from_choi(s: ChoiMatrix, time_tag: Optional[float] = None) -> KrausSet:
    '''
    Kraus decomposition from the eigendecomposition S = U D U^dagger:
    E_i = sum_j sqrt(d_i) u_ji G_j, ordered by descending weight d_i.

    Parameters:
        s : ChoiMatrix
            Choi matrix of a completely positive map.
        time_tag : float
            Stored in the returned KrausSet.
    Raises:
        ValueError
            If an eigenvalue of S is below -1e-8 (the map is not completely positive).
    Returns:
        The Kraus set, operators with weight below 1e-14 dropped.
    '''
    weights, vectors = herm_eig(s.s)
    if weights[-1] < -PSD_ERROR_TOL:
        raise ValueError("complete positivity violated, choi eigenvalue {:.3e}".format(weights[-1]))
    ops = []
    for i, weight in enumerate(weights):
        if weight < KRAUS_WEIGHT_CUTOFF:
            continue
        ops.append(np.sqrt(weight) * np.einsum("j,jab->ab", vectors[:, i], _BASIS))
    return KrausSet(tuple(ops), time_tag)


def apply_to_operator(k: KrausSet, op: np.ndarray) -> np.ndarray:
    '''
    Returns:
        sum_k E_k op E_k^dagger for any operator op (not necessarily a state).
    '''
    op = np.asarray(op, dtype=complex)
    return sum(e @ op @ dagger(e) for e in k.ops)


def apply_channel(k: KrausSet, rho: Union[DensityMatrix, np.ndarray]) -> DensityMatrix:
    '''
    Parameters:
        k : KrausSet
            Complete Kraus set.
        rho : DensityMatrix
            Input state.
    Raises:
        ValueError
            If the set is further than 1e-8 from completeness, or the output is not a state.
    Returns:
        The output state sum_k E_k rho E_k^dagger, renormalized to unit trace.
    '''
    if not _check_complete(k.ops):
        raise ValueError("invalid kraus set, completeness error {:.3e}".format(k.completeness_error()))
    mat = rho.mat if isinstance(rho, DensityMatrix) else rho
    out = apply_to_operator(k, mat)
    out = (out + dagger(out)) / 2
    return DensityMatrix(out / np.trace(out).real)


def transfer_matrix(k: KrausSet) -> np.ndarray:
    '''
    Returns:
        Real 4x4 matrix R_kl = tr[G_k phi(G_l)], the channel on the basis coordinates.
        Two Kraus sets describe the same channel exactly when their transfer matrices agree.
    '''
    images = [apply_to_operator(k, basis_op) for basis_op in HERM_BASIS]
    return np.real(np.array([[np.trace(gk @ image) for image in images] for gk in HERM_BASIS]))


def channel_action_distance(first: KrausSet, second: KrausSet) -> float:
    '''
    Returns:
        The largest entry difference between the two channels' images of the basis operators.
    '''
    return max(
        float(np.max(np.abs(apply_to_operator(first, g) - apply_to_operator(second, g))))
        for g in HERM_BASIS
    )
