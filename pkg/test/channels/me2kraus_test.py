from gdpkit.channels.me2kraus import (LocalGenerator, PropagatorMatrix, ChoiMatrix, KrausSet, generator_matrix,
                                     propagator, choi, kraus_from_choi, apply_channel, apply_to_operator,
                                     transfer_matrix, channel_action_distance)
from gdpkit.algebra.operators import IDENTITY, SIGMA_X, SIGMA_Z, HERM_BASIS
from gdpkit.algebra.density_matrix import DensityMatrix
import numpy as np
import unittest


class LocalGeneratorTest(unittest.TestCase):

    def test_negative_rate(self):
        self.assertRaises(ValueError, LocalGenerator, 0.0, -1.0, 0.0)

    def test_null(self):
        self.assertTrue(LocalGenerator(0, 0, 0).is_null())
        self.assertFalse(LocalGenerator(1, 0, 0).is_null())

    def test_preserves_trace(self):
        g = LocalGenerator(0.3, 0.7, 0.2)
        self.assertAlmostEqual(np.trace(g.apply(np.diag([1, 0]))), 0, places=14)


class GeneratorMatrixTest(unittest.TestCase):

    def test_closed_form(self):
        x, y, z = 0.3, 0.7, 0.2
        expected = np.array([
            [0, 0, 0, 0],
            [0, -2 * (y + z), -2 * x, 0],
            [0, 2 * x, -2 * (y + z), 0],
            [0, 0, 0, -4 * z]
        ])
        np.testing.assert_allclose(generator_matrix(LocalGenerator(x, y, z)), expected, atol=1e-14)

    def test_matches_action(self):
        g = LocalGenerator(0.3, 0.7, 0.2)
        projected = np.array([[np.trace(gk @ g.apply(gl)) for gl in HERM_BASIS] for gk in HERM_BASIS])
        np.testing.assert_allclose(generator_matrix(g), projected, atol=1e-14)

    def test_isotropic(self):
        np.testing.assert_allclose(generator_matrix(LocalGenerator(0, 0.5, 0.5)), np.diag([0, -2, -2, -2]),
                                   atol=1e-14)

    def test_rotation_only(self):
        l = generator_matrix(LocalGenerator(1, 0, 0))
        expected = np.zeros((4, 4))
        expected[1, 2] = -2
        expected[2, 1] = 2
        np.testing.assert_allclose(l, expected, atol=1e-14)

    def test_null(self):
        np.testing.assert_allclose(generator_matrix(LocalGenerator(0, 0, 0)), np.zeros((4, 4)))


class PropagatorTest(unittest.TestCase):

    def test_zero_time(self):
        f = propagator(generator_matrix(LocalGenerator(0.3, 0.7, 0.2)), 0)
        np.testing.assert_allclose(f.f, np.eye(4), atol=1e-15)

    def test_diagonal(self):
        f = propagator(np.diag([0.0, -2.0, -2.0, -2.0]), 1)
        np.testing.assert_allclose(f.f, np.diag([1, np.exp(-2), np.exp(-2), np.exp(-2)]), rtol=1e-12)

    def test_negative_time(self):
        self.assertRaises(ValueError, propagator, np.zeros((4, 4)), -1)

    def test_not_trace_preserving(self):
        self.assertRaises(ValueError, PropagatorMatrix, np.full((4, 4), 0.5))

    def test_wrong_shape(self):
        self.assertRaises(ValueError, PropagatorMatrix, np.eye(3))


class ChoiTest(unittest.TestCase):

    def test_identity_channel(self):
        s = choi(PropagatorMatrix(np.eye(4)))
        expected = np.zeros((4, 4))
        expected[0, 0] = 2
        np.testing.assert_allclose(s.s, expected, atol=1e-14)

    def test_trace_checked(self):
        self.assertRaises(ValueError, ChoiMatrix, np.eye(4))

    def test_hermiticity_checked(self):
        s = np.diag([2.0, 0, 0, 0]).astype(complex)
        s[0, 1] = 1
        self.assertRaises(ValueError, ChoiMatrix, s)


class KrausFromChoiTest(unittest.TestCase):

    def test_identity_channel(self):
        k = kraus_from_choi(choi(PropagatorMatrix(np.eye(4))))
        self.assertEqual(len(k), 1)
        # Unique up to a global phase, fixed by the eigenvector convention.
        np.testing.assert_allclose(k.ops[0], IDENTITY, atol=1e-14)

    def test_reproduces_propagator(self):
        rng = np.random.default_rng(23)
        for _ in range(10):
            x, y, z = rng.normal(), rng.uniform(0, 2), rng.uniform(0, 2)
            t = rng.uniform(0, 1)
            f = propagator(generator_matrix(LocalGenerator(x, y, z)), t)
            k = kraus_from_choi(choi(f), time_tag=t)
            self.assertTrue(k.is_complete())
            self.assertEqual(k.time_tag, t)
            np.testing.assert_allclose(transfer_matrix(k), f.f, atol=1e-10)

    def test_not_completely_positive(self):
        self.assertRaises(ValueError, kraus_from_choi, ChoiMatrix(np.diag([2.5, -0.5, 0, 0])))


class KrausSetTest(unittest.TestCase):

    def test_empty(self):
        self.assertRaises(ValueError, KrausSet, ())

    def test_mixed_shapes(self):
        self.assertRaises(ValueError, KrausSet, (IDENTITY, np.eye(4)))

    def test_identity(self):
        k = KrausSet.identity(0.5)
        self.assertEqual(k.time_tag, 0.5)
        self.assertEqual(k.completeness_error(), 0)

    def test_read_only(self):
        k = KrausSet.identity()
        with self.assertRaises(ValueError):
            k.ops[0][0, 0] = 2


class ApplyChannelTest(unittest.TestCase):

    def test_identity(self):
        rho = DensityMatrix.from_ket([np.sqrt(0.3), np.sqrt(0.7) * 1j])
        np.testing.assert_allclose(apply_channel(KrausSet.identity(), rho).mat, rho.mat, atol=1e-15)

    def test_accepts_matrix(self):
        out = apply_channel(KrausSet((SIGMA_X,)), np.diag([1, 0]))
        np.testing.assert_allclose(out.mat, np.diag([0, 1]))

    def test_near_complete_renormalized(self):
        k = KrausSet((np.sqrt(1 + 1e-9) * IDENTITY,))
        out = apply_channel(k, DensityMatrix.from_ket([np.sqrt(0.3), np.sqrt(0.7)]))
        self.assertAlmostEqual(np.trace(out.mat).real, 1.0, places=15)
        np.testing.assert_allclose(out.mat, np.array([[0.3, np.sqrt(0.21)], [np.sqrt(0.21), 0.7]]), atol=1e-14)

    def test_incomplete(self):
        self.assertRaises(ValueError, apply_channel, KrausSet((0.5 * IDENTITY,)), DensityMatrix.maximally_mixed())

    def test_unital(self):
        f = propagator(generator_matrix(LocalGenerator(0.4, 0.3, 0.9)), 0.7)
        k = kraus_from_choi(choi(f))
        out = apply_channel(k, DensityMatrix.maximally_mixed())
        np.testing.assert_allclose(out.mat, np.eye(2) / 2, atol=1e-14)

    def test_any_operator(self):
        np.testing.assert_allclose(apply_to_operator(KrausSet((SIGMA_X,)), SIGMA_Z), -SIGMA_Z)


class ChannelActionDistanceTest(unittest.TestCase):

    def test_same_channel_other_decomposition(self):
        # A unitary mixing of the operators leaves the channel unchanged.
        ops = (np.sqrt(0.5) * IDENTITY, np.sqrt(0.5) * SIGMA_Z)
        mixed = ((ops[0] + ops[1]) / np.sqrt(2), (ops[0] - ops[1]) / np.sqrt(2))
        self.assertLess(channel_action_distance(KrausSet(ops), KrausSet(mixed)), 1e-15)

    def test_different_channels(self):
        distance = channel_action_distance(KrausSet.identity(), KrausSet((SIGMA_Z,)))
        self.assertAlmostEqual(distance, np.sqrt(2), places=14)

    def test_transfer_matrix_identity(self):
        np.testing.assert_allclose(transfer_matrix(KrausSet.identity()), np.eye(4), atol=1e-15)
        self.assertEqual(len(HERM_BASIS), 4)
