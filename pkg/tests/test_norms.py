from __future__ import absolute_import

import math
import unittest

from redgrp.algebra import (
    AlgebraElement,
    delta,
    generator_sum
)
from redgrp.exc import (
    NonConvergenceError,
    UnsupportedOracleError
)
from redgrp.norms import (
    NormEstimate,
    norm_oracle,
    symbol_supremum
)
from redgrp.oracles import (
    AbelianOracle,
    FiniteOracle,
    FreeOracle
)


def suite():
    """Define all the tests of the module."""
    suite = unittest.TestSuite()
    load = unittest.defaultTestLoader.loadTestsFromTestCase
    suite.addTest(load(NormEstimateTestCase))
    suite.addTest(load(NormOracleTestCase))
    suite.addTest(load(SymbolSupremumTestCase))
    return suite


class NormEstimateTestCase(unittest.TestCase):

    def test_unknown_method(self):
        with self.assertRaises(ValueError):
            NormEstimate(1.0, 'guess')

    def test_negative_value(self):
        with self.assertRaises(ValueError):
            NormEstimate(-1.0, 'dft')

    def test_float(self):
        self.assertEqual(float(NormEstimate(2, 'dft')), 2.0)


class NormOracleTestCase(unittest.TestCase):

    def test_cyclic_difference(self):
        z5 = AbelianOracle.cyclic(5)
        f = delta(z5, (1,)) - delta(z5)
        estimate = norm_oracle(f)
        self.assertEqual(estimate.method, 'dft')
        self.assertAlmostEqual(estimate.value, 2 * math.sin(2 * math.pi / 5),
                               places=12)
        self.assertAlmostEqual(estimate.value, 1.9021130325903, places=12)

    def test_finite_abelian_generator_sum(self):
        # 2cos(2 pi k / 12) peaks at k = 0
        f = generator_sum(AbelianOracle.cyclic(12))
        self.assertAlmostEqual(norm_oracle(f).value, 2.0, places=12)

    def test_positive_element_has_l1_norm(self):
        f = generator_sum(AbelianOracle([3, 4]))
        self.assertAlmostEqual(norm_oracle(f).value, 4.0, places=12)

    def test_integers_by_symbol(self):
        f = generator_sum(AbelianOracle.cyclic(0))
        estimate = norm_oracle(f)
        self.assertEqual(estimate.method, 'symbol')
        self.assertLessEqual(estimate.value, 2.0 + 1e-12)
        self.assertAlmostEqual(estimate.value, 2.0, delta=2e-8)
        self.assertGreater(estimate.iterations, 0)

    def test_signed_symbol(self):
        # |1 - 2 e^{i theta}| is largest at theta = pi
        z = AbelianOracle.cyclic(0)
        f = delta(z) - delta(z, (1,), 2)
        self.assertAlmostEqual(norm_oracle(f).value, 3.0, delta=2e-8)

    def test_mixed_torsion(self):
        # Z x Z/2 with generators a (infinite) and b (order two)
        oracle = AbelianOracle([0, 2])
        f = generator_sum(oracle)
        self.assertEqual(dict(f), {(1,): 1, (-1,): 1, (2,): 2})
        self.assertAlmostEqual(norm_oracle(f, tol=1e-6).value, 4.0,
                               delta=2e-6)

    def test_free_abelian_rank_two(self):
        f = generator_sum(AbelianOracle([0, 0]))
        self.assertAlmostEqual(norm_oracle(f, tol=1e-6).value, 4.0,
                               delta=2e-6)

    def test_symmetric_group(self):
        f = generator_sum(FiniteOracle.symmetric(3))
        estimate = norm_oracle(f)
        self.assertEqual(estimate.method, 'full-regular')
        self.assertAlmostEqual(estimate.value, 4.0, places=10)

    def test_sign_character_of_symmetric_group(self):
        # the transposition acts by -1 in the sign representation
        s3 = FiniteOracle.symmetric(3)
        f = delta(s3) - delta(s3, (1,))
        self.assertAlmostEqual(norm_oracle(f).value, 2.0, places=10)

    def test_zero_element(self):
        self.assertEqual(
            norm_oracle(AlgebraElement(FiniteOracle.symmetric(3))).value, 0)
        self.assertEqual(
            norm_oracle(AlgebraElement(AbelianOracle.cyclic(0))).value, 0)

    def test_free_groups_are_unsupported(self):
        with self.assertRaises(UnsupportedOracleError):
            norm_oracle(generator_sum(FreeOracle(2)))

    def test_box_budget(self):
        f = generator_sum(AbelianOracle.cyclic(0))
        with self.assertRaises(NonConvergenceError):
            norm_oracle(f, tol=1e-12, box_cap=3)


class SymbolSupremumTestCase(unittest.TestCase):

    def test_no_frequencies(self):
        value, boxes = symbol_supremum([[]], [2 - 1j], 1e-8)
        self.assertAlmostEqual(value, abs(2 - 1j))
        self.assertEqual(boxes, 0)

    def test_several_maxima(self):
        # 1 + e^{3 i theta} / 2 peaks at theta = 0, 2 pi / 3, 4 pi / 3
        value, _ = symbol_supremum([[0], [3]], [1, 0.5], 1e-8)
        self.assertAlmostEqual(value, 1.5, delta=1e-8)

    def test_lower_bound_certificate(self):
        # 1 + e^{i theta} + e^{2 i theta} peaks at 3
        value, _ = symbol_supremum([[0], [1], [2]], [1, 1, 1], 1e-7)
        self.assertLessEqual(value, 3.0 + 1e-12)
        self.assertGreaterEqual(value, 3.0 - 1e-7)


if __name__ == '__main__':
    unittest.main()
