from __future__ import absolute_import

import math
import unittest
from fractions import Fraction

from redgrp.algebra import (
    delta,
    generator_sum
)
from redgrp.exc import (
    BallOverflowError,
    InconclusiveError,
    OracleMismatchError
)
from redgrp.marked import (
    Marking,
    MarkedSequence,
    estimate_norm,
    limit_of_means,
    marked_distance,
    relation_ball,
    srf_uniformity,
    strong_convergence_table
)
from redgrp.means import (
    FolnerMean,
    TreeMean
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
    suite.addTest(load(RelationBallTestCase))
    suite.addTest(load(MarkedDistanceTestCase))
    suite.addTest(load(StrongConvergenceTestCase))
    suite.addTest(load(EstimateNormTestCase))
    suite.addTest(load(LimitOfMeansTestCase))
    suite.addTest(load(SrfUniformityTestCase))
    return suite


def cyclic(n):
    return AbelianOracle.cyclic(n)


class RelationBallTestCase(unittest.TestCase):

    def test_cyclic(self):
        relations = relation_ball(cyclic(5), 5)
        self.assertEqual(list(relations), [(), (1,) * 5, (-1,) * 5])
        self.assertEqual(relations.relators, [(1,) * 5, (-1,) * 5])
        self.assertIn((1, 1, 1, 1, 1), relations)
        self.assertNotIn((1,), relations)

    def test_commutators_of_the_plane(self):
        relations = relation_ball(AbelianOracle([0, 0]), 4)
        # the cyclic conjugates of abAB and of its inverse
        self.assertEqual(len(relations), 9)
        self.assertIn((1, 2, -1, -2), relations)
        self.assertIn((-2, -1, 2, 1), relations)

    def test_free_groups_have_no_relations(self):
        self.assertEqual(list(relation_ball(FreeOracle(2), 4)), [()])

    def test_cap(self):
        with self.assertRaises(BallOverflowError):
            relation_ball(FreeOracle(3), 8, cap=1000)

    def test_label(self):
        self.assertEqual(Marking(cyclic(3)).label, 'cyclic:3')
        self.assertEqual(Marking(cyclic(3), label='C3').label, 'C3')


class MarkedDistanceTestCase(unittest.TestCase):

    def test_cyclic_against_integers(self):
        distance = marked_distance(cyclic(5), cyclic(0))
        self.assertEqual(distance.agreement, 4)
        self.assertTrue(distance.exact)
        self.assertEqual(distance.distance, Fraction(1, 16))
        self.assertEqual(distance.witness, (1,) * 5)
        self.assertEqual(str(distance), '2^-4')

    def test_cyclic_groups(self):
        distance = marked_distance(cyclic(2), cyclic(3))
        self.assertEqual(distance.agreement, 1)
        self.assertEqual(distance.distance, Fraction(1, 2))

    def test_symmetric(self):
        self.assertEqual(marked_distance(cyclic(7), cyclic(4)).agreement,
                         marked_distance(cyclic(4), cyclic(7)).agreement)

    def test_plane_against_free_group(self):
        distance = marked_distance(AbelianOracle([0, 0]), FreeOracle(2),
                                   r_max=6)
        self.assertEqual(distance.agreement, 3)
        self.assertEqual(distance.witness, (1, 2, -1, -2))

    def test_equal_groups_give_a_bound(self):
        distance = marked_distance(cyclic(0), cyclic(0))
        self.assertFalse(distance.exact)
        self.assertEqual(distance.agreement, 16)
        self.assertEqual(str(distance), '<=2^-16')

    def test_no_difference_within_the_radius(self):
        distance = marked_distance(cyclic(40), FreeOracle(1), r_max=30)
        self.assertFalse(distance.exact)
        self.assertEqual(distance.agreement, 30)

    def test_ranks_must_match(self):
        with self.assertRaises(OracleMismatchError):
            marked_distance(cyclic(3), FreeOracle(2))

    def test_cap(self):
        with self.assertRaises(BallOverflowError):
            marked_distance(AbelianOracle([0, 0]), FreeOracle(2), r_max=20,
                            cap=1000)


class StrongConvergenceTestCase(unittest.TestCase):

    def setUp(self):
        free = FreeOracle(1)
        self.f = delta(free) - delta(free, (1,))
        self.sequence = MarkedSequence(
            [cyclic(n) for n in (5, 11, 101, 1001, 10001)], cyclic(0))

    def test_cyclic_groups_converge_to_integers(self):
        table = strong_convergence_table(self.sequence, self.f)
        self.assertAlmostEqual(table.limit_norm, 2.0, delta=1e-8)
        first = table.rows[0]
        self.assertAlmostEqual(first.norm, 1.9021130325903, places=12)
        self.assertEqual(str(first.distance), '2^-4')
        self.assertEqual(str(table.rows[1].distance), '2^-10')
        self.assertEqual(str(table.rows[2].distance), '<=2^-16')
        gaps = table.gaps()
        for a, b in zip(gaps, gaps[1:]):
            self.assertLess(b, a)
        self.assertLess(gaps[-1], 1e-6)
        self.assertEqual([r.label for r in table.rows],
                         ['cyclic:5', 'cyclic:11', 'cyclic:101',
                          'cyclic:1001', 'cyclic:10001'])

    def test_jobs_keep_the_order(self):
        serial = strong_convergence_table(self.sequence, self.f)
        threaded = strong_convergence_table(self.sequence, self.f, jobs=3)
        self.assertEqual([(r.index, r.norm) for r in serial.rows],
                         [(r.index, r.norm) for r in threaded.rows])

    def test_method_per_term(self):
        with self.assertRaises(ValueError):
            strong_convergence_table(self.sequence, self.f,
                                     methods=['oracle'])

    def test_element_must_live_on_the_free_group(self):
        with self.assertRaises(OracleMismatchError):
            strong_convergence_table(self.sequence,
                                     generator_sum(cyclic(0)))

    def test_ranks_must_match(self):
        with self.assertRaises(OracleMismatchError):
            MarkedSequence([cyclic(3)], AbelianOracle([0, 0]))


class EstimateNormTestCase(unittest.TestCase):

    def test_methods(self):
        f = generator_sum(FreeOracle(2))
        self.assertAlmostEqual(estimate_norm(f, 'compression:2'),
                               math.sqrt(7), places=6)
        moment = estimate_norm(f, 'moment:8')
        self.assertGreater(moment, 2.3)
        self.assertLess(moment, 2 * math.sqrt(3))
        self.assertAlmostEqual(estimate_norm(generator_sum(cyclic(12))), 2.0)

    def test_unknown_methods(self):
        f = generator_sum(cyclic(12))
        for method in ('exact', 'moment:x', 'compression:'):
            with self.assertRaises(ValueError):
                estimate_norm(f, method)


class LimitOfMeansTestCase(unittest.TestCase):

    def test_windows_on_cyclic_groups(self):
        terms = [cyclic(50), cyclic(60)]
        sequence = MarkedSequence(terms, cyclic(0))
        result = limit_of_means(sequence, [FolnerMean(t, 10) for t in terms])
        self.assertEqual(result.certificate.defect, Fraction(2, 5))
        self.assertTrue(result.certificate.stabilized)
        self.assertEqual(result.mean.support_radius, 10)
        self.assertEqual(result.mean((1, 1, 1)),
                         FolnerMean(cyclic(0), 10)(()))
        self.assertEqual(result.terms_used, [0, 1])

    def test_terms_too_far_from_the_limit(self):
        terms = [cyclic(5), cyclic(6)]
        sequence = MarkedSequence(terms, cyclic(0))
        with self.assertRaises(InconclusiveError):
            limit_of_means(sequence, [FolnerMean(t, 10) for t in terms])

    def test_means_that_do_not_stabilize(self):
        terms = [cyclic(50), cyclic(60)]
        sequence = MarkedSequence(terms, cyclic(0))
        with self.assertRaises(InconclusiveError):
            limit_of_means(sequence, [FolnerMean(terms[0], 10),
                                      FolnerMean(terms[1], 12)])

    def test_constant_free_sequence(self):
        free = FreeOracle(2)
        sequence = MarkedSequence([free, free], free)
        result = limit_of_means(sequence, [TreeMean(free, 5)] * 2)
        self.assertEqual(result.certificate.defect, Fraction(8, 5))

    def test_one_mean_per_term(self):
        sequence = MarkedSequence([cyclic(50)], cyclic(0))
        with self.assertRaises(ValueError):
            limit_of_means(sequence, [])


class SrfUniformityTestCase(unittest.TestCase):

    def setUp(self):
        self.instances = [generator_sum(cyclic(12)),
                          generator_sum(FiniteOracle.symmetric(3))]

    def test_threshold_is_reached(self):
        table = srf_uniformity(self.instances, 0.2, moments=8)
        self.assertTrue(table.uniform)
        for row, reference in zip(table.rows, (2.0, 4.0)):
            self.assertAlmostEqual(row.reference, reference, places=10)
            self.assertTrue(row.reached)
            self.assertLessEqual(row.n, 5)
            self.assertGreaterEqual(row.root, 0.8 * reference)
        self.assertEqual(table.bound, max(r.n for r in table.rows))

    def test_exact_threshold_is_never_reached(self):
        table = srf_uniformity(self.instances[:1], 0, moments=8)
        self.assertFalse(table.uniform)
        self.assertIsNone(table.bound)
        self.assertIsNone(table.rows[0].n)
        self.assertLess(table.rows[0].root, 2.0)

    def test_delta_range(self):
        for value in (-0.1, 1):
            with self.assertRaises(ValueError):
                srf_uniformity(self.instances, value)


if __name__ == '__main__':
    unittest.main()
