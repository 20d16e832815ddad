from __future__ import absolute_import

import math
import unittest
from fractions import Fraction

from redgrp.algebra import (
    AlgebraElement,
    RadialElement,
    convolve,
    delta,
    generator_sum,
    involute,
    l1_norm,
    l2_norm,
    moment_sequence,
    radial_convolve,
    radial_moments,
    random_element,
    sphere_size
)
from redgrp.exc import (
    OracleMismatchError,
    SupportOverflowError,
    UnsupportedOracleError
)
from redgrp.oracles import (
    AbelianOracle,
    FreeOracle
)


def suite():
    """Define all the tests of the module."""
    suite = unittest.TestSuite()
    load = unittest.defaultTestLoader.loadTestsFromTestCase
    suite.addTest(load(AlgebraElementTestCase))
    suite.addTest(load(MomentSequenceTestCase))
    suite.addTest(load(RadialElementTestCase))
    return suite


class AlgebraElementTestCase(unittest.TestCase):

    def setUp(self):
        self.z = AbelianOracle.cyclic(0)
        self.free = FreeOracle(2)

    def test_words_are_canonicalized_and_merged(self):
        f = AlgebraElement(self.z, [((1, -1, 1), 2), ((1,), 3), ((), 0)])
        self.assertEqual(dict(f), {(1,): 5})
        self.assertEqual(f.evaluate((1, 1, -1)), 5)
        self.assertEqual(f.evaluate((1, 1)), 0)

    def test_zero_coefficients_disappear(self):
        f = delta(self.z, (1,)) - delta(self.z, (1,))
        self.assertEqual(len(f), 0)
        self.assertEqual(l1_norm(f), 0)

    def test_arithmetic_is_exact(self):
        f = delta(self.z, (1,), Fraction(1, 3)) + delta(self.z, (), 2)
        g = f * 3
        self.assertEqual(g.evaluate((1,)), 1)
        self.assertTrue(g.exact)
        self.assertEqual(f.support, [(), (1,)])

    def test_convolution_on_the_integers(self):
        f = delta(self.z, (1,)) + delta(self.z, (-1,))
        g = convolve(f, f)
        self.assertEqual(dict(g), {(1, 1): 1, (): 2, (-1, -1): 1})

    def test_convolution_is_not_commutative_on_free_groups(self):
        a, b = delta(self.free, (1,)), delta(self.free, (2,))
        self.assertEqual(dict(a.convolve(b)), {(1, 2): 1})
        self.assertEqual(dict(b.convolve(a)), {(2, 1): 1})

    def test_convolution_of_different_groups(self):
        with self.assertRaises(OracleMismatchError):
            convolve(delta(self.z), delta(self.free))

    def test_convolution_cap(self):
        f = generator_sum(self.free)
        with self.assertRaises(SupportOverflowError) as context:
            convolve(f, f, cap=5)
        self.assertEqual(context.exception.cap, 5)

    def test_involution(self):
        f = AlgebraElement(self.free, [((1, 2), 1j), ((), 2)])
        g = involute(f)
        self.assertEqual(dict(g), {(-2, -1): -1j, (): 2})
        self.assertFalse(f.is_self_adjoint())
        self.assertTrue(generator_sum(self.free).is_self_adjoint())

    def test_norms(self):
        f = delta(self.z, (), 3) + delta(self.z, (1,), -4)
        self.assertEqual(l1_norm(f), 7)
        self.assertEqual(l2_norm(f), 5)
        g = delta(self.z, (), 1) + delta(self.z, (1,), 1)
        self.assertAlmostEqual(l2_norm(g), math.sqrt(2))

    def test_pushforward_merges_collisions(self):
        f = AlgebraElement(FreeOracle(1), [((1,), 1), ((1,) * 13, 2)])
        g = f.pushforward(AbelianOracle.cyclic(12))
        self.assertEqual(dict(g), {(1,): 3})
        with self.assertRaises(OracleMismatchError):
            f.pushforward(self.free)

    def test_random_element(self):
        f = random_element(self.free, 4, l1=3, seed=5)
        self.assertEqual(f, random_element(self.free, 4, l1=3, seed=5))
        self.assertLessEqual(len(f), 4)
        self.assertLessEqual(l1_norm(f), 3)
        self.assertTrue(f.exact)
        self.assertTrue(all(len(w) <= 2 for w in f))


class MomentSequenceTestCase(unittest.TestCase):

    def test_central_binomials_on_the_integers(self):
        z = AbelianOracle.cyclic(0)
        f = delta(z, (1,)) + delta(z, (-1,))
        sequence = moment_sequence(f, 200)
        self.assertEqual(len(sequence), 200)
        for n in range(1, 201):
            self.assertEqual(sequence.moment(n), math.comb(2 * n, n))
        self.assertEqual(sequence.check(), [])
        self.assertLess(sequence.best(), 2)
        self.assertGreater(sequence.best(), 1.9)

    def test_free_group_generator_sum(self):
        f = generator_sum(FreeOracle(2))
        sequence = moment_sequence(f, 4)
        self.assertEqual(sequence.moment(1), 4)
        self.assertEqual(sequence.moment(2), 28)
        self.assertEqual(sequence.values,
                         radial_moments(RadialElement.from_element(f),
                                        4).values)
        self.assertEqual(sequence.check(), [])

    def test_identity_mass(self):
        f = delta(FreeOracle(2), (), Fraction(-5, 2))
        sequence = moment_sequence(f, 3)
        self.assertEqual(sequence.values, [Fraction(25, 4),
                                           Fraction(625, 16),
                                           Fraction(15625, 64)])
        self.assertAlmostEqual(sequence.root(1), 2.5)

    def test_truncation_at_the_cap(self):
        f = generator_sum(FreeOracle(2))
        sequence = moment_sequence(f, 6, cap=50)
        self.assertTrue(sequence.truncated)
        self.assertEqual(sequence.requested, 6)
        self.assertEqual(sequence.values, [4, 28])

    def test_check_reports_violations(self):
        f = generator_sum(FreeOracle(2))
        sequence = moment_sequence(f, 2)
        sequence.roots = [5.0, 1.0]
        problems = sequence.check()
        self.assertEqual(len(problems), 2)

    def test_invalid_count(self):
        with self.assertRaises(ValueError):
            moment_sequence(generator_sum(FreeOracle(2)), 0)


class RadialElementTestCase(unittest.TestCase):

    def test_sphere_sizes(self):
        self.assertEqual([sphere_size(3, r) for r in range(4)],
                         [1, 4, 12, 36])

    def test_detects_radial_elements(self):
        f = generator_sum(FreeOracle(2))
        self.assertEqual(RadialElement.from_element(f),
                         RadialElement(3, [0, 1]))
        self.assertIsNone(RadialElement.from_element(
            delta(FreeOracle(2), (1,))))
        self.assertIsNone(RadialElement.from_element(
            delta(AbelianOracle.cyclic(0), ())))

    def test_round_trip_through_the_group_algebra(self):
        oracle = FreeOracle(2)
        r = RadialElement(3, [1, Fraction(1, 2), -2])
        self.assertEqual(RadialElement.from_element(r.to_element(oracle)), r)
        self.assertEqual(r.l1_norm(), l1_norm(r.to_element(oracle)))
        with self.assertRaises(UnsupportedOracleError):
            r.to_element(FreeOracle(3))

    def test_radial_convolution_matches_full_convolution(self):
        for rank in (2, 3):
            oracle = FreeOracle(rank)
            q = 2 * rank - 1
            pairs = [
                (RadialElement(q, [1, 2, Fraction(1, 3)]),
                 RadialElement(q, [-1, 0, 5])),
                (RadialElement(q, [0, 1]), RadialElement(q, [2, 0, 0, 1])),
                (RadialElement.sphere(q, 2), RadialElement.sphere(q, 2)),
            ]
            for f, g in pairs:
                expected = convolve(f.to_element(oracle),
                                    g.to_element(oracle))
                self.assertEqual(radial_convolve(f, g).to_element(oracle),
                                 expected)

    def test_sphere_recursion(self):
        a1 = RadialElement.sphere(3, 1)
        self.assertEqual(a1.convolve(a1), RadialElement(3, [4, 0, 1]))
        a2 = RadialElement.sphere(3, 2)
        self.assertEqual(a1.convolve(a2), RadialElement(3, [0, 3, 0, 1]))

    def test_mismatched_trees(self):
        with self.assertRaises(OracleMismatchError):
            RadialElement(3, [1]) + RadialElement(5, [1])


if __name__ == '__main__':
    unittest.main()
