from gdpkit.bath.reduction import reduction_condition, reduction_condition_roots
from gdpkit.bath.ohmic import MicroParams
import math
import unittest

HOT_BATH = MicroParams(temperature=50.0, coupling=0.02, qubit_freq=1.0, cutoff=15.0)
COLD = MicroParams(temperature=0.1, coupling=0.02, qubit_freq=1.0, cutoff=15.0)


class ReductionConditionTest(unittest.TestCase):

    def test_value_at_zero(self):
        # 2 gamma_zz(0) - 2 gamma(0) = 4 pi alpha T - pi alpha T
        self.assertAlmostEqual(reduction_condition(HOT_BATH, 0.0), 3 * math.pi * 0.02 * 50.0, places=12)

    def test_decoupled_scan(self):
        scan = reduction_condition_roots(HOT_BATH.with_coupling(0.0))
        self.assertTrue(scan.degenerate)
        self.assertEqual(scan.roots, [])

    def test_high_temperature_scan(self):
        scan = reduction_condition_roots(HOT_BATH, high_t_approx=True)
        self.assertFalse(scan.degenerate)
        self.assertAlmostEqual(scan.f_at_zero, 3 * math.pi, places=10)
        self.assertEqual(scan.roots, [])

    def test_cold_bath_root(self):
        scan = reduction_condition_roots(COLD)
        self.assertGreater(len(scan.roots), 0)
        for root in scan.roots:
            self.assertTrue(0 <= root <= 5 * COLD.cutoff)
            self.assertLess(abs(reduction_condition(COLD, root)), 1e-7)

    def test_roots_independent_of_coupling(self):
        first = reduction_condition_roots(COLD).roots
        second = reduction_condition_roots(COLD.with_coupling(0.5)).roots
        self.assertEqual(len(first), len(second))
        for a, b in zip(first, second):
            self.assertAlmostEqual(a, b, delta=1e-9)
