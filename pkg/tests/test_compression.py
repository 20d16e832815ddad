from __future__ import absolute_import

import math
import unittest

from redgrp.algebra import (
    AlgebraElement,
    delta,
    generator_sum,
    random_element
)
from redgrp.compression import (
    compression,
    increasing_window_profile,
    operator_norm,
    prop_a_window,
    sandwich_check
)
from redgrp.exc import (
    NonConvergenceError,
    OracleMismatchError
)
from redgrp.groups import ball
from redgrp.means import ModulusTable
from redgrp.norms import norm_oracle
from redgrp.oracles import (
    AbelianOracle,
    FiniteOracle,
    FreeOracle
)


def suite():
    """Define all the tests of the module."""
    suite = unittest.TestSuite()
    load = unittest.defaultTestLoader.loadTestsFromTestCase
    suite.addTest(load(CompressionTestCase))
    suite.addTest(load(OperatorNormTestCase))
    suite.addTest(load(SandwichTestCase))
    suite.addTest(load(WindowProfileTestCase))
    return suite


def path_norm(n):
    """Largest eigenvalue of the path on {-n .. n}"""
    return 2 * math.cos(math.pi / (2 * n + 2))


class CompressionTestCase(unittest.TestCase):

    def setUp(self):
        self.z = AbelianOracle.cyclic(0)

    def test_matrix_entries(self):
        # C[x, y] = f(x y^-1) on the window (), a, A
        op = compression(delta(self.z, (1,)), ball(self.z, None, 1))
        self.assertEqual(op.dimension, 3)
        self.assertEqual(op.toarray().tolist(),
                         [[0, 0, 1], [1, 0, 0], [0, 0, 0]])
        self.assertFalse(op.is_hermitian())

    def test_adjoint_is_compression_of_involution(self):
        window = ball(self.z, None, 2)
        f = delta(self.z, (1,), 2) + delta(self.z, (-1, -1), 1j)
        op = compression(f, window)
        self.assertEqual(op.adjoint().toarray().tolist(),
                         compression(f.involute(), window).toarray().tolist())

    def test_self_adjoint_elements_compress_to_hermitian(self):
        op = compression(generator_sum(FreeOracle(2)),
                         ball(FreeOracle(2), None, 2))
        self.assertEqual(op.dimension, 17)
        self.assertTrue(op.is_hermitian())

    def test_finite_circulant(self):
        z3 = AbelianOracle.cyclic(3)
        op = compression(generator_sum(z3), ball(z3, None, 1))
        self.assertEqual(op.toarray().tolist(),
                         [[0, 1, 1], [1, 0, 1], [1, 1, 0]])

    def test_window_on_another_group(self):
        with self.assertRaises(OracleMismatchError):
            compression(generator_sum(self.z),
                        ball(AbelianOracle.cyclic(5), None, 1))


class OperatorNormTestCase(unittest.TestCase):

    def setUp(self):
        self.z = AbelianOracle.cyclic(0)
        self.f = generator_sum(self.z)

    def test_path_graph_closed_form(self):
        for n in (1, 5, 20, 200):
            op = compression(self.f, ball(self.z, None, n))
            self.assertEqual(op.dimension, 2 * n + 1)
            estimate = operator_norm(op, method='dense')
            self.assertAlmostEqual(estimate.value, path_norm(n), delta=1e-9)
        self.assertAlmostEqual(path_norm(1), math.sqrt(2), places=14)

    def test_power_iteration_matches_dense(self):
        op = compression(self.f, ball(self.z, None, 20))
        estimate = operator_norm(op, tol=1e-12)
        self.assertEqual(estimate.method, 'power-iteration')
        self.assertGreater(estimate.iterations, 0)
        self.assertAlmostEqual(estimate.value, path_norm(20), delta=1e-9)

    def test_power_iteration_on_a_long_path(self):
        op = compression(self.f, ball(self.z, None, 200))
        estimate = operator_norm(op, method='power', tol=1e-12)
        self.assertEqual(estimate.method, 'power-iteration')
        self.assertAlmostEqual(estimate.value, path_norm(200), delta=1e-9)

    def test_auto_picks_dense_on_small_windows(self):
        op = compression(self.f, ball(self.z, None, 5))
        self.assertEqual(operator_norm(op, method='auto').method, 'dense')

    def test_power_iteration_is_deterministic(self):
        op = compression(generator_sum(FreeOracle(2)),
                         ball(FreeOracle(2), None, 3))
        self.assertEqual(operator_norm(op).value, operator_norm(op).value)

    def test_non_normal_matrix(self):
        op = compression(delta(self.z, (1,), 3), ball(self.z, None, 4))
        self.assertAlmostEqual(operator_norm(op).value, 3.0, places=9)

    def test_zero_element(self):
        op = compression(AlgebraElement(self.z), ball(self.z, None, 3))
        self.assertEqual(operator_norm(op).value, 0.0)

    def test_arguments(self):
        op = compression(self.f, ball(self.z, None, 2))
        with self.assertRaises(ValueError):
            operator_norm(op, tol=0)
        with self.assertRaises(ValueError):
            operator_norm(op, method='lanczos')

    def test_iteration_cap(self):
        op = compression(self.f, ball(self.z, None, 200))
        with self.assertRaises(NonConvergenceError) as ctx:
            operator_norm(op, max_iterations=3)
        self.assertEqual(ctx.exception.iterations, 3)


class SandwichTestCase(unittest.TestCase):

    def test_whole_finite_group_is_exact(self):
        z12 = AbelianOracle.cyclic(12)
        window = ball(z12, None, 6)
        self.assertEqual(len(window), 12)
        for seed in range(20):
            f = random_element(z12, 4, l1=3, seed=seed)
            reference = norm_oracle(f)
            op = compression(f, window)
            value = operator_norm(op, method='dense').value
            self.assertAlmostEqual(value, reference.value, delta=1e-12)
            report = sandwich_check(f, window, 0, reference, method='dense')
            self.assertTrue(report.passed)
            self.assertLessEqual(abs(report.compression - report.reference),
                                 1e-12)

    def test_symmetric_group_whole_window(self):
        s3 = FiniteOracle.symmetric(3)
        window = ball(s3, None, 3)
        self.assertEqual(len(window), 6)
        for seed in range(5):
            f = random_element(s3, 4, l1=3, seed=seed)
            report = sandwich_check(f, window, 0, norm_oracle(f),
                                    method='dense')
            self.assertTrue(report)

    def test_path_against_integers(self):
        z = AbelianOracle.cyclic(0)
        f = generator_sum(z)
        window = ball(z, None, 20)
        report = sandwich_check(f, window, 0.0029, 2.0)
        self.assertTrue(report.passed)
        self.assertEqual(report.dimension, 41)
        self.assertAlmostEqual(report.compression, path_norm(20), places=8)

        report = sandwich_check(f, window, 0.002, 2.0)
        self.assertFalse(report.passed)
        self.assertLess(report.upper_margin, 0)
        self.assertGreater(report.lower_margin, 0)

    def test_compression_above_reference_fails(self):
        z12 = AbelianOracle.cyclic(12)
        f = generator_sum(z12)
        report = sandwich_check(f, ball(z12, None, 6), 0, 1.5,
                                method='dense')
        self.assertFalse(report.passed)
        self.assertLess(report.lower_margin, 0)

    def test_saturated_window(self):
        z12 = AbelianOracle.cyclic(12)
        window = prop_a_window(z12, [(), (1,), (-1,)], 0,
                               ModulusTable.constant(6))
        self.assertEqual(len(window), 12)

    def test_window_from_modulus(self):
        z = AbelianOracle.cyclic(0)
        F = [(), (1,), (-1,)]
        # |F| + floor(2 / eps) = 3 + 2
        window = prop_a_window(z, F, 1, ModulusTable.from_function(
            lambda m: m))
        self.assertEqual(len(window), 11)

    def test_window_arguments(self):
        z = AbelianOracle.cyclic(0)
        F = [(), (1,), (-1,)]
        with self.assertRaises(ValueError):
            prop_a_window(z, F, -1, ModulusTable.constant(2))
        with self.assertRaises(ValueError):
            prop_a_window(z, F, 0, ModulusTable.from_function(lambda m: m))


class WindowProfileTestCase(unittest.TestCase):

    def test_integers(self):
        z = AbelianOracle.cyclic(0)
        profile = increasing_window_profile(generator_sum(z), range(1, 6),
                                            tol=1e-12)
        self.assertFalse(profile.truncated)
        self.assertTrue(profile.monotone)
        norms = profile.norms()
        for r, value in zip(range(1, 6), norms):
            self.assertAlmostEqual(value, path_norm(r), delta=1e-9)
        for a, b in zip(norms, norms[1:]):
            self.assertLess(a, b)
        self.assertEqual([row.dimension for row in profile.rows],
                         [3, 5, 7, 9, 11])

    def test_jobs_do_not_change_rows(self):
        f = generator_sum(FreeOracle(2))
        serial = increasing_window_profile(f, [1, 2, 3])
        threaded = increasing_window_profile(f, [1, 2, 3], jobs=3)
        self.assertEqual([r.as_tuple() for r in serial.rows],
                         [r.as_tuple() for r in threaded.rows])

    def test_free_group_squeeze(self):
        f = generator_sum(FreeOracle(2))
        profile = increasing_window_profile(f, range(1, 11), moments=6)
        norms = profile.norms()
        self.assertEqual(len(norms), 10)
        self.assertTrue(profile.monotone)
        for a, b in zip(norms, norms[1:]):
            self.assertGreaterEqual(b, a - 1e-9)
        self.assertGreaterEqual(norms[-1], 3.3)
        self.assertLessEqual(norms[-1], 2 * math.sqrt(3) + 1e-9)
        self.assertEqual(profile.rows[-1].dimension, 2 * 3 ** 10 - 1)
        # f^n δ_e lives on the ball of radius n
        moments = profile.moments
        self.assertEqual(len(moments), 6)
        for n in range(1, 7):
            self.assertLessEqual(moments.root(n), norms[n - 1] + 1e-9)
        self.assertAlmostEqual(norms[0], 2.0, places=9)

    def test_truncation(self):
        f = generator_sum(FreeOracle(2))
        profile = increasing_window_profile(f, [1, 2, 3, 4], cap=50)
        self.assertTrue(profile.truncated)
        self.assertEqual([row.radius for row in profile.rows], [1, 2])

    def test_radii_must_increase(self):
        with self.assertRaises(ValueError):
            increasing_window_profile(generator_sum(FreeOracle(2)), [2, 1])


if __name__ == '__main__':
    unittest.main()
