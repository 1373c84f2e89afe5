from gdpkit.entanglement.concurrence import (concurrence, spin_flip_eigenvalues, binary_entropy,
                                            entanglement_of_formation)
from gdpkit.entanglement.pair import BELL_PHI_PLUS, PairState
from gdpkit.algebra.density_matrix import DensityMatrix
from gdpkit.algebra.operators import SIGMA_Y, kron, dagger
import math
import numpy as np
import scipy.linalg
import unittest


def werner(p):
    return PairState(p * np.outer(BELL_PHI_PLUS, BELL_PHI_PLUS) + (1 - p) * np.eye(4) / 4)


def brute_force_concurrence(rho):
    flipped = kron(SIGMA_Y, SIGMA_Y) @ np.conj(rho) @ kron(SIGMA_Y, SIGMA_Y)
    values = np.sort(np.abs(np.linalg.eigvals(rho @ flipped)))[::-1]
    roots = np.sqrt(values)
    return max(0.0, roots[0] - roots[1] - roots[2] - roots[3])


def random_pair_state(rng):
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    m = a @ dagger(a)
    return PairState(m / np.trace(m))


def random_unitary(rng):
    h = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    return scipy.linalg.expm(1j * (h + dagger(h)) / 2)


class ConcurrenceTest(unittest.TestCase):

    def test_bell(self):
        self.assertAlmostEqual(concurrence(DensityMatrix.from_ket(BELL_PHI_PLUS)), 1.0, delta=1e-10)

    def test_bell_phases(self):
        for phi in np.linspace(0.0, 2 * math.pi, 7):
            ket = np.array([1, 0, 0, np.exp(1j * phi)]) / math.sqrt(2)
            self.assertLess(1 - concurrence(DensityMatrix.from_ket(ket)), 1e-10, msg=phi)

    def test_rotated_bell(self):
        rng = np.random.default_rng(73)
        bell = DensityMatrix.from_ket(BELL_PHI_PLUS).mat
        for _ in range(10):
            u = kron(random_unitary(rng), random_unitary(rng))
            self.assertAlmostEqual(concurrence(PairState(u @ bell @ dagger(u))), 1.0, delta=1e-10)

    def test_product(self):
        self.assertAlmostEqual(concurrence(DensityMatrix.from_ket([1, 0, 0, 0])), 0.0, places=10)

    def test_werner(self):
        rho = werner(0.5)
        self.assertAlmostEqual(concurrence(rho), 0.25, delta=1e-10)
        self.assertAlmostEqual(brute_force_concurrence(rho.mat), 0.25, delta=1e-10)

    def test_separable_werner(self):
        self.assertEqual(concurrence(werner(0.2)), 0.0)

    def test_matches_brute_force(self):
        rng = np.random.default_rng(67)
        for _ in range(10):
            rho = random_pair_state(rng)
            self.assertAlmostEqual(concurrence(rho), brute_force_concurrence(rho.mat), places=8)

    def test_local_unitary_invariance(self):
        rng = np.random.default_rng(71)
        for _ in range(10):
            rho = random_pair_state(rng)
            u = kron(random_unitary(rng), random_unitary(rng))
            rotated = PairState(u @ rho.mat @ dagger(u))
            self.assertAlmostEqual(concurrence(rotated), concurrence(rho), delta=1e-10)

    def test_eigenvalues_sorted(self):
        values = spin_flip_eigenvalues(werner(0.5))
        self.assertTrue(np.all(np.diff(values) <= 0))
        self.assertTrue(np.all(values >= 0))

    def test_qubit_rejected(self):
        self.assertRaises(ValueError, concurrence, DensityMatrix.maximally_mixed(2))


class EntanglementOfFormationTest(unittest.TestCase):

    def test_separable(self):
        self.assertEqual(entanglement_of_formation(0.0), 0.0)

    def test_maximal(self):
        self.assertAlmostEqual(entanglement_of_formation(1.0), 1.0, places=15)

    def test_half(self):
        x = (1 + math.sqrt(0.75)) / 2
        expected = -x * math.log2(x) - (1 - x) * math.log2(1 - x)
        self.assertAlmostEqual(entanglement_of_formation(0.5), expected, places=14)
        self.assertAlmostEqual(entanglement_of_formation(0.5), 0.354573, delta=5e-5)

    def test_monotone(self):
        values = [entanglement_of_formation(c) for c in np.linspace(0, 1, 101)]
        self.assertTrue(all(b > a for a, b in zip(values, values[1:])))

    def test_out_of_range(self):
        self.assertRaises(ValueError, entanglement_of_formation, 1.1)
        self.assertRaises(ValueError, entanglement_of_formation, -0.1)

    def test_binary_entropy(self):
        self.assertAlmostEqual(binary_entropy(0.5), 1.0, places=15)
        self.assertEqual(binary_entropy(1.0), 0.0)
