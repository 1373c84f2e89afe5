from typing import Sequence, Callable, Mapping, List, Any
import numpy as np

from ..algebra.operators import dagger

# Tolerances of the DensityMatrix invariants.
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10


class MatrixValidatorInterface():
    '''
    Interface defining basic behaviour of a standard matrix validator object.
    '''

    def __init__(self):
        super().__init__()

    def get_checks(self) -> Sequence[Callable]:
        '''
        Returns:
            The Sequence of checks this Validator would apply on a given matrix.
        '''
        pass

    def add_checks(self, *args: Sequence[Callable]):
        '''
        Add one or more checks to use when validating.

        Parameters:
            *args : Sequence[Callable]
                A list of functions or lambdas that expect the matrix as a parameter.
        '''
        pass

    def remove_checks(self, *args: Sequence[Callable]):
        '''
        Remove one or more checks from the ones to apply when validating.

        Parameters:
            *args : Sequence[Callable]
                A list of functions or lambdas. They will not be removed if not currently present.
        '''
        pass

    def validate(self, subject: Any) -> Mapping[Callable, Any]:
        '''
        Applies all previously provided checks to the given subject.

        Parameters:
            subject : Any
                The matrix (or sequence of matrices) to validate, passed to all the checks.
        Returns:
            A Mapping of each check to its result.
        '''
        pass


class BaseValidator(MatrixValidatorInterface):
    '''
    A simple class performing the given checks, with no other particular logic.
    '''

    def __init__(self):
        super().__init__()
        self.__checks = list()

    def get_checks(self) -> List[Callable]:
        '''
        Returns:
            The list of checks this Validator would apply on a given subject.
        '''
        return self.__checks

    def add_checks(self, *args: Sequence[Callable]):
        '''
        Add one or more checks to use when validating.

        Parameters:
            *args : Sequence[Callable]
                A list of functions or lambdas that expect the subject as a parameter.
        '''
        self.__checks.extend(args)
        return self

    def remove_checks(self, *args: Sequence[Callable]):
        '''
        Remove one or more checks from the ones to apply when validating.

        Parameters:
            *args : Sequence[Callable]
                A list of functions or lambdas. They will not be removed if not currently present.
        '''
        for x in [a for a in args if a in self.__checks]:
            self.__checks.remove(x)

    def validate(self, subject: Any) -> Mapping[Callable, Any]:
        '''
        Applies all previously provided checks to the given subject.

        Parameters:
            subject : Any
                Will be passed to all previously given checks.
        Returns:
            A Mapping of each check to its result.
        '''
        return {check: check(subject) for check in self.__checks}

    def failures(self, subject: Any) -> List[str]:
        '''
        Parameters:
            subject : Any
                Will be passed to all previously given checks.
        Returns:
            The names of the checks that returned a falsy value, in insertion order.
        '''
        return [check.__name__ for check, result in self.validate(subject).items() if not result]


def make_check_hermitian(tol: float = HERMITIAN_TOL) -> Callable[[np.ndarray], bool]:
    '''
    Returns:
        Callable[np.ndarray] : Checks the largest entry of m - m^dagger is within tol.
    '''
    def check_hermitian(m: np.ndarray) -> bool:
        return float(np.max(np.abs(m - dagger(m)))) < tol

    return check_hermitian


def make_check_unit_trace(tol: float = TRACE_TOL) -> Callable[[np.ndarray], bool]:
    '''
    Returns:
        Callable[np.ndarray] : Checks |tr m - 1| is within tol.
    '''
    def check_unit_trace(m: np.ndarray) -> bool:
        return abs(complex(np.trace(m)) - 1) < tol

    return check_unit_trace


def make_check_psd(tol: float = PSD_TOL) -> Callable[[np.ndarray], bool]:
    '''
    Returns:
        Callable[np.ndarray] : Checks the eigenvalues of the hermitian part of m are all >= -tol.
    '''
    def check_psd(m: np.ndarray) -> bool:
        return float(np.min(np.linalg.eigvalsh((m + dagger(m)) / 2))) >= -tol

    return check_psd


def make_check_completeness(tol: float = 1e-10) -> Callable[[Sequence[np.ndarray]], bool]:
    '''
    Returns:
        Callable[Sequence[np.ndarray]] : Checks sum_k E_k^dagger E_k equals the identity within tol,
        entry by entry.
    '''
    def check_completeness(ops: Sequence[np.ndarray]) -> bool:
        total = sum(dagger(op) @ op for op in ops)
        return float(np.max(np.abs(total - np.eye(total.shape[0])))) < tol

    return check_completeness


def make_check_first_row(tol: float = 1e-12) -> Callable[[np.ndarray], bool]:
    '''
    Returns:
        Callable[np.ndarray] : Checks the first row of a basis-coordinates propagator is (1, 0, 0, 0),
        the trace preservation of the represented map.
    '''
    def check_first_row(f: np.ndarray) -> bool:
        expected = np.zeros(f.shape[1])
        expected[0] = 1.0
        return float(np.max(np.abs(f[0] - expected))) < tol

    return check_first_row


def density_matrix_validator(hermitian_tol: float = HERMITIAN_TOL, trace_tol: float = TRACE_TOL,
                             psd_tol: float = PSD_TOL) -> BaseValidator:
    '''
    Returns:
        A BaseValidator holding the three density matrix invariants: hermitian, unit trace, PSD.
    '''
    return BaseValidator().add_checks(
        make_check_hermitian(hermitian_tol),
        make_check_unit_trace(trace_tol),
        make_check_psd(psd_tol)
    )
