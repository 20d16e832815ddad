from __future__ import absolute_import

import os
import unittest
from fractions import Fraction

from mock import patch

from redgrp.exc import ConfigurationError
from redgrp.util import (
    BALL_CAP_ENV,
    DEFAULT_BALL_CAP,
    ball_cap,
    exact_sqrt,
    format_scalar,
    ignored,
    log_fraction
)


def suite():
    """Define all the tests of the module."""
    suite = unittest.TestSuite()
    load = unittest.defaultTestLoader.loadTestsFromTestCase
    suite.addTest(load(BallCapTestCase))
    suite.addTest(load(ScalarTestCase))
    return suite


class BallCapTestCase(unittest.TestCase):

    def test_explicit_cap_wins(self):
        with patch.dict(os.environ, {BALL_CAP_ENV: '10'}):
            self.assertEqual(ball_cap(99), 99)
        with self.assertRaises(ValueError):
            ball_cap(0)

    def test_environment_and_default(self):
        with patch.dict(os.environ, {BALL_CAP_ENV: '10'}):
            self.assertEqual(ball_cap(), 10)
        with patch.dict(os.environ, {BALL_CAP_ENV: ''}):
            self.assertEqual(ball_cap(), DEFAULT_BALL_CAP)

    def test_invalid_environment(self):
        with patch.dict(os.environ, {BALL_CAP_ENV: '1e6'}):
            with self.assertRaises(ConfigurationError):
                ball_cap()

    def test_ignored(self):
        with ignored(KeyError):
            {}['missing']
        with self.assertRaises(KeyError):
            with ignored(ValueError):
                {}['missing']


class ScalarTestCase(unittest.TestCase):

    def test_format_scalar(self):
        self.assertEqual(format_scalar(Fraction(3, 4)), '3/4')
        self.assertEqual(format_scalar(Fraction(4, 2)), '2')
        self.assertEqual(format_scalar(7), '7')
        self.assertEqual(format_scalar(2 ** 0.5), '1.41421356237')
        self.assertEqual(format_scalar(1 + 2j), '1+2j')

    def test_exact_sqrt(self):
        self.assertEqual(exact_sqrt(Fraction(9, 4)), Fraction(3, 2))
        self.assertIsNone(exact_sqrt(2))
        self.assertIsNone(exact_sqrt(-1))

    def test_log_fraction_of_huge_values(self):
        value = Fraction(10 ** 400, 3)
        self.assertAlmostEqual(log_fraction(value),
                               400 * 2.302585092994046 - 1.0986122886681098,
                               places=6)
        with self.assertRaises(ValueError):
            log_fraction(0)


if __name__ == '__main__':
    unittest.main()
