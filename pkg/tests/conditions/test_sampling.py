"""Unit tests for sample sets"""

# pylint: disable=missing-class-docstring, missing-function-docstring
import os
import sys
import unittest
import numpy as np
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../../src')))
from fixpoint_lab.conditions.element import Box  # noqa E402
from fixpoint_lab.conditions.sampling import SampleSet  # noqa E402


class SampleSetTests(unittest.TestCase):

    def test_grid_pairs_include_diagonal(self):
        samples = SampleSet.grid_pairs(Box(0.0, 1.0), 3)
        self.assertEqual(len(samples), 9)
        np.testing.assert_array_equal(samples.xs[:3, 0], [0.0, 0.0, 0.0])
        np.testing.assert_array_equal(samples.ys[:3, 0], [0.0, 0.5, 1.0])

    def test_default_budget(self):
        self.assertEqual(len(SampleSet.generate(Box(0.0, 1.0))), 10000)
        self.assertEqual(len(SampleSet.generate(Box([0.0, 0.0], [2.0, 2.0]))), 10000)
        self.assertEqual(len(SampleSet.generate(Box(0.0, 1.0), random_count=1000)), 11000)

    def test_random_pairs_are_seeded(self):
        first = SampleSet.random_pairs(Box([0.0, 0.0], [2.0, 2.0]), 50, seed=3)
        second = SampleSet.random_pairs(Box([0.0, 0.0], [2.0, 2.0]), 50, seed=3)
        np.testing.assert_array_equal(first.xs, second.xs)
        np.testing.assert_array_equal(first.ys, second.ys)
        self.assertTrue(Box([0.0, 0.0], [2.0, 2.0]).contains(first.xs))

    def test_from_pairs(self):
        samples = SampleSet.from_pairs([(0.0, 1.0), (0.5, 0.25)])
        self.assertEqual(samples.xs.shape, (2, 1))
        self.assertEqual(samples.ys[1, 0], 0.25)

    def test_shape_mismatch(self):
        with self.assertRaises(ValueError):
            SampleSet(np.zeros((2, 1)), np.zeros((3, 1)))


if __name__ == '__main__':
    unittest.main()
