from __future__ import absolute_import

import unittest

from redgrp.oracles import FreeOracle
from redgrp.words import (
    reduce,
    reduced_words
)


def suite():
    """Define all the tests of the module."""
    suite = unittest.TestSuite()
    load = unittest.defaultTestLoader.loadTestsFromTestCase
    suite.addTest(load(FreeOracleTestCase))
    return suite


class FreeOracleTestCase(unittest.TestCase):

    def setUp(self):
        self.free = FreeOracle(2)

    def test_spec(self):
        self.assertEqual(self.free.spec, 'free:2')
        self.assertIsNone(self.free.order())

    def test_normal_form_is_free_reduction(self):
        self.assertEqual(self.free.normal_form((1, 2, -2, 2)), (1, 2))
        self.assertTrue(self.free.is_identity((2, 1, -1, -2)))

    def test_seam_multiplication_matches_reduction(self):
        words = list(reduced_words(2, 3))
        for x in words[::7]:
            for y in words[::5]:
                self.assertEqual(self.free.multiply(x, y), reduce(x + y))


if __name__ == '__main__':
    unittest.main()
