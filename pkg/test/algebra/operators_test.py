from gdpkit.algebra.operators import (IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z, HERM_BASIS, check_dim, dagger,
                                     is_hermitian, hs_inner, herm_eig, floor_eigenvalues, mat_exp, psd_sqrt, trace_norm,
                                     kron)
import numpy as np
import unittest


def random_hermitian(rng, dim=4):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (a + dagger(a)) / 2


class CheckDimTest(unittest.TestCase):

    def test_qubit(self):
        self.assertEqual(check_dim(IDENTITY), 2)

    def test_pair(self):
        self.assertEqual(check_dim(np.eye(4)), 4)

    def test_unsupported_dim(self):
        self.assertRaises(ValueError, check_dim, np.eye(3))

    def test_not_square(self):
        self.assertRaises(ValueError, check_dim, np.zeros((2, 4)))


class HsInnerTest(unittest.TestCase):

    def test_normalized(self):
        self.assertAlmostEqual(hs_inner(SIGMA_X / np.sqrt(2), SIGMA_X / np.sqrt(2)), 1, places=14)

    def test_orthogonal(self):
        self.assertAlmostEqual(hs_inner(SIGMA_X / np.sqrt(2), SIGMA_Y / np.sqrt(2)), 0, places=14)

    def test_traceless_pauli(self):
        self.assertEqual(hs_inner(IDENTITY, SIGMA_Z), 0)

    def test_dim_mismatch(self):
        self.assertRaises(ValueError, hs_inner, IDENTITY, np.eye(4))

    def test_basis_gram_matrix(self):
        gram = np.array([[hs_inner(a, b) for b in HERM_BASIS] for a in HERM_BASIS])
        np.testing.assert_allclose(gram, np.eye(4), atol=1e-14)

    def test_basis_is_read_only(self):
        with self.assertRaises(ValueError):
            HERM_BASIS[0][0, 0] = 2


class HermEigTest(unittest.TestCase):

    def test_sigma_z(self):
        values, vectors = herm_eig(SIGMA_Z)
        np.testing.assert_allclose(values, [1, -1])
        np.testing.assert_allclose(vectors, np.eye(2), atol=1e-15)

    def test_identity(self):
        values, _ = herm_eig(np.eye(4))
        np.testing.assert_allclose(values, [1, 1, 1, 1])

    def test_not_hermitian(self):
        self.assertRaises(ValueError, herm_eig, np.array([[0, 1], [0, 0]], dtype=complex))

    def test_reconstruction(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            m = random_hermitian(rng)
            values, vectors = herm_eig(m)
            rebuilt = sum(values[i] * np.outer(vectors[:, i], np.conj(vectors[:, i])) for i in range(4))
            self.assertLess(np.max(np.abs(m - rebuilt)), 1e-10)

    def test_descending_and_phase_fixed(self):
        rng = np.random.default_rng(11)
        values, vectors = herm_eig(random_hermitian(rng))
        self.assertTrue(np.all(np.diff(values) <= 0))
        for column in range(4):
            pivot = vectors[np.argmax(np.abs(vectors[:, column])), column]
            self.assertAlmostEqual(pivot.imag, 0, places=14)
            self.assertGreater(pivot.real, 0)


class MatExpTest(unittest.TestCase):

    def test_zero_scale(self):
        rng = np.random.default_rng(3)
        np.testing.assert_allclose(mat_exp(random_hermitian(rng), 0), np.eye(4), atol=1e-15)

    def test_diagonal(self):
        expected = np.diag([1, np.exp(-2), np.exp(-2), np.exp(-2)])
        np.testing.assert_allclose(mat_exp(np.diag([0.0, -2.0, -2.0, -2.0]), 1), expected, rtol=1e-12)

    def test_semigroup(self):
        rng = np.random.default_rng(5)
        m = 1j * random_hermitian(rng) - np.eye(4)
        np.testing.assert_allclose(mat_exp(m, 0.3) @ mat_exp(m, 0.4), mat_exp(m, 0.7), atol=1e-10)

    def test_real_stays_real(self):
        self.assertFalse(np.iscomplexobj(mat_exp(np.diag([0.0, -1.0]), 2)))

    def test_overflow(self):
        self.assertRaises(OverflowError, mat_exp, np.eye(2), 800)


class PsdSqrtTest(unittest.TestCase):

    def test_identity(self):
        np.testing.assert_allclose(psd_sqrt(np.eye(2)), np.eye(2), atol=1e-15)

    def test_diagonal(self):
        np.testing.assert_allclose(psd_sqrt(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]), atol=1e-14)

    def test_square_of_root(self):
        rng = np.random.default_rng(13)
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        m = dagger(a) @ a
        r = psd_sqrt(m)
        self.assertTrue(is_hermitian(r))
        self.assertLess(np.max(np.abs(r @ r - m)), 1e-10)

    def test_tiny_negative_clipped(self):
        np.testing.assert_allclose(psd_sqrt(np.diag([1.0, -1e-12])), np.diag([1.0, 0.0]), atol=1e-15)

    def test_round_off_eigenvalue(self):
        np.testing.assert_allclose(psd_sqrt(np.diag([1.0, 1e-17])), np.diag([1.0, 0.0]), atol=1e-15)

    def test_negative(self):
        self.assertRaises(ValueError, psd_sqrt, np.diag([1.0, -1e-3]))


class FloorEigenvaluesTest(unittest.TestCase):

    def test_relative_floor(self):
        values = floor_eigenvalues(np.array([2.0, 1e-13, 1e-15, -1e-12]))
        np.testing.assert_array_equal(values, [2.0, 1e-13, 0.0, 0.0])

    def test_scale_free(self):
        np.testing.assert_array_equal(floor_eigenvalues(np.array([1e-6, 1e-19])), [1e-6, 1e-19])

    def test_negative(self):
        self.assertRaises(ValueError, floor_eigenvalues, np.array([1.0, -1e-3]))


class TraceNormTest(unittest.TestCase):

    def test_sigma_z(self):
        self.assertAlmostEqual(trace_norm(SIGMA_Z), 2, places=14)

    def test_zero(self):
        self.assertEqual(trace_norm(np.zeros((2, 2))), 0)

    def test_orthogonal_projectors(self):
        self.assertAlmostEqual(trace_norm(np.diag([1.0, 0.0]) - np.diag([0.0, 1.0])), 2, places=14)

    def test_triangle_and_homogeneity(self):
        rng = np.random.default_rng(17)
        for _ in range(10):
            a, b = random_hermitian(rng), random_hermitian(rng)
            self.assertLessEqual(trace_norm(a + b), trace_norm(a) + trace_norm(b) + 1e-12)
            self.assertAlmostEqual(trace_norm(-2.5 * a), 2.5 * trace_norm(a), places=10)


class KronTest(unittest.TestCase):

    def test_identity(self):
        np.testing.assert_allclose(kron(IDENTITY, IDENTITY), np.eye(4))

    def test_left_factor_is_first_qubit(self):
        np.testing.assert_allclose(kron(SIGMA_Z, IDENTITY), np.diag([1, 1, -1, -1]))

    def test_flip_both(self):
        ket = np.array([1, 0, 0, 0])
        np.testing.assert_allclose(kron(SIGMA_X, SIGMA_X) @ ket, [0, 0, 0, 1])

    def test_dim_mismatch(self):
        self.assertRaises(ValueError, kron, np.eye(4), IDENTITY)
