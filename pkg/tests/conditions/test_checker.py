"""Unit tests for contractive-condition certification"""

# pylint: disable=missing-class-docstring, missing-function-docstring
import os
import sys
import unittest
import numpy as np
from hypothesis import given, settings, strategies as st
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../../src')))
import fixpoint_lab.conditions.checker as fp_checker  # noqa E402
import fixpoint_lab.conditions.element as fp_element  # noqa E402
import fixpoint_lab.enumeration as fp_enum  # noqa E402
import fixpoint_lab.exception as fp_exception  # noqa E402
from fixpoint_lab.conditions.sampling import SampleSet  # noqa E402
from fixpoint_lab.corpus.workspace import Workspace  # noqa E402


def make_half():
    return fp_element.MappingSpec.scalar_formula("half", fp_element.Box(0.0, 1.0), scale=0.5, known_fixed_point=0.0)


def make_identity():
    return fp_element.MappingSpec.scalar_formula("identity", fp_element.Box(0.0, 1.0))


def make_affine():
    return fp_element.MappingSpec.affine("affine_2d", [[0.8, 0.0], [0.0, 0.5]], [0.2, 0.5],
                                         fp_element.Box([0.0, 0.0], [2.0, 2.0]), known_fixed_point=[1.0, 1.0])


class DeltaFromZamfirescuTests(unittest.TestCase):

    def test_delta(self):
        self.assertAlmostEqual(fp_checker.delta_from_zamfirescu(0.6, 0.3, 0.3), 0.6)
        self.assertAlmostEqual(fp_checker.delta_from_zamfirescu(0.2, 0.4, 0.1), 0.4 / 0.6)

    def test_invalid_constants(self):
        with self.assertRaises(fp_exception.InvalidConstants):
            fp_checker.delta_from_zamfirescu(1.0, 0.3, 0.3)
        with self.assertRaises(fp_exception.InvalidConstants):
            fp_checker.delta_from_zamfirescu(0.5, 0.5, 0.3)
        with self.assertRaises(fp_exception.InvalidConstants):
            fp_checker.delta_from_zamfirescu(0.5, 0.3, 0.0)


class CertificationTests(unittest.TestCase):

    def setUp(self):
        self.norm = fp_element.Norm.euclidean()
        self.samples = SampleSet.generate(fp_element.Box(0.0, 1.0))

    def test_half_is_zamfirescu(self):
        result = fp_checker.check_zamfirescu(make_half(), self.norm, (0.6, 0.3, 0.3), self.samples)
        self.assertIsInstance(result, fp_element.ContractiveCertificate)
        self.assertTrue(result.is_valid)
        self.assertEqual(result.sample_count, 10000)
        self.assertEqual(result.to_dict()["status"], "certificate")

    def test_implied_classes_on_half(self):
        delta = fp_checker.delta_from_zamfirescu(0.6, 0.3, 0.3)
        quasi = fp_checker.check_quasi_contractive(make_half(), self.norm, delta, self.samples)
        self.assertIsInstance(quasi, fp_element.ContractiveCertificate)
        self.assertTrue(quasi.b2_holds)
        like = fp_checker.check_contractive_like(make_half(), self.norm, delta,
                                                 fp_element.GaugeFunction.linear(2.0 * delta), self.samples)
        self.assertIsInstance(like, fp_element.ContractiveCertificate)
        self.assertEqual(like.condition_class, fp_enum.ConditionClass.CONTRACTIVE_LIKE)
        self.assertEqual(like.delta, delta)

    def test_implied_classes_on_corpus(self):
        certified = []
        for mapping in Workspace.from_corpus().mappings:
            samples = SampleSet.generate(mapping.domain)
            constants = mapping.certificate["zamfirescu"]
            if not fp_checker.check_zamfirescu(mapping, self.norm, constants, samples).is_valid:
                continue
            certified.append(mapping.label)
            delta = fp_checker.delta_from_zamfirescu(*constants)
            with self.subTest(map=mapping.label):
                quasi = fp_checker.check_quasi_contractive(mapping, self.norm, delta, samples)
                self.assertIsInstance(quasi, fp_element.ContractiveCertificate)
                self.assertTrue(quasi.is_valid)
                self.assertEqual(quasi.sample_count, 10000)
                like = fp_checker.check_contractive_like(mapping, self.norm, delta,
                                                         fp_element.GaugeFunction.linear(2.0 * delta), samples)
                self.assertIsInstance(like, fp_element.ContractiveCertificate)
                self.assertTrue(like.is_valid)
        self.assertEqual(certified, ["half", "shifted_half", "affine_2d", "cosine", "piecewise"])

    def test_osilike_udomene_on_half(self):
        result = fp_checker.check_osilike_udomene(make_half(), self.norm, 0.5, 0.01, self.samples)
        self.assertTrue(result.is_valid)
        self.assertGreaterEqual(result.max_slack, 0.0)

    def test_identity_violates_zamfirescu(self):
        result = fp_checker.check_zamfirescu(make_identity(), self.norm, (0.5, 0.25, 0.25), self.samples)
        self.assertIsInstance(result, fp_element.ConditionViolation)
        self.assertFalse(result.is_valid)
        self.assertEqual(result.pair_index, 1)
        np.testing.assert_array_equal(result.x, [0.0])
        self.assertAlmostEqual(result.y[0], 1.0 / 99.0)
        self.assertEqual(len(result.residuals), 3)
        self.assertAlmostEqual(result.residuals[0], 0.5 / 99.0)
        self.assertAlmostEqual(result.residuals[1], 1.0 / 99.0)
        self.assertAlmostEqual(result.residuals[2], 0.5 / 99.0)
        self.assertTrue(all(value > 0.0 for value in result.residuals))

    def test_identity_violates_contractive_like(self):
        result = fp_checker.check_contractive_like(make_identity(), self.norm, 0.5,
                                                   fp_element.GaugeFunction.linear(1.0), self.samples)
        self.assertIsInstance(result, fp_element.ConditionViolation)
        self.assertEqual(result.to_dict()["status"], "violation")

    def test_affine_under_maximum_norm(self):
        samples = SampleSet.generate(make_affine().domain, random_count=200)
        result = fp_checker.check_contractive_like(make_affine(), fp_element.Norm.maximum(), 0.8,
                                                   fp_element.GaugeFunction.linear(1.0), samples)
        self.assertTrue(result.is_valid)
        self.assertEqual(result.sample_count, 10200)

    def test_invalid_delta(self):
        with self.assertRaises(fp_exception.InvalidConstants):
            fp_checker.check_quasi_contractive(make_half(), self.norm, 1.0, self.samples)

    @settings(max_examples=25, deadline=None)
    @given(st.floats(min_value=-0.9, max_value=0.9), st.floats(min_value=0.0, max_value=1.0))
    def test_scalar_contractions_are_contractive_like(self, slope, position):
        low = max(0.0, -slope)
        high = min(1.0, 1.0 - slope)
        shift = low + position * (high - low)
        mapping = fp_element.MappingSpec.scalar_formula("line", fp_element.Box(0.0, 1.0), scale=slope,
                                                        shift=shift)
        samples = SampleSet.generate(mapping.domain, grid_budget=25)
        result = fp_checker.check_contractive_like(mapping, self.norm, min(0.99, abs(slope) + 0.01),
                                                   fp_element.GaugeFunction.linear(1.0), samples)
        self.assertIsInstance(result, fp_element.ContractiveCertificate)


class UniquenessTests(unittest.TestCase):

    def test_affine_grid_has_single_fixed_point(self):
        mapping = make_affine()
        samples = SampleSet.generate(mapping.domain)
        certificate = fp_checker.check_contractive_like(mapping, fp_element.Norm.euclidean(), 0.8,
                                                        fp_element.GaugeFunction.linear(1.0), samples)
        verdict = fp_checker.verify_unique_fixed_point(mapping, certificate, mapping.domain.grid(21))
        self.assertEqual(verdict.passing_count, 1)
        self.assertFalse(verdict.contradiction)
        np.testing.assert_array_equal(verdict.fixed_point, [1.0, 1.0])

    def test_half_among_three_candidates(self):
        certificate = fp_element.ContractiveCertificate(fp_enum.ConditionClass.CONTRACTIVE_LIKE, {"delta": 0.5},
                                                        1, 0.0, fp_element.GaugeFunction.linear(1.0))
        verdict = fp_checker.verify_unique_fixed_point(make_half(), certificate, [0.0, 0.5, 1.0])
        self.assertEqual(verdict.passing_count, 1)
        self.assertFalse(verdict.contradiction)
        np.testing.assert_array_equal(verdict.fixed_point, [0.0])

    def test_shifted_half_on_grid(self):
        mapping = Workspace.from_corpus().find("shifted_half")
        certificate = fp_element.ContractiveCertificate(fp_enum.ConditionClass.CONTRACTIVE_LIKE, {"delta": 0.5},
                                                        1, 0.0, fp_element.GaugeFunction.linear(1.0))
        verdict = fp_checker.verify_unique_fixed_point(mapping, certificate, mapping.domain.grid(101))
        self.assertEqual(verdict.passing_count, 1)
        self.assertFalse(verdict.contradiction)
        self.assertAlmostEqual(float(verdict.fixed_point[0]), 1.0, places=12)

    def test_no_candidate_passes(self):
        mapping = make_half()
        certificate = fp_element.ContractiveCertificate(fp_enum.ConditionClass.CONTRACTIVE_LIKE, {"delta": 0.5},
                                                        1, 0.0, fp_element.GaugeFunction.linear(1.0))
        verdict = fp_checker.verify_unique_fixed_point(mapping, certificate, [0.5, 1.0])
        self.assertIsNone(verdict.fixed_point)
        self.assertEqual(verdict.passing_count, 0)

    def test_contradiction_flagged(self):
        certificate = fp_element.ContractiveCertificate(fp_enum.ConditionClass.CONTRACTIVE_LIKE, {"delta": 0.5},
                                                        1, 0.0, fp_element.GaugeFunction.linear(1.0))
        with self.assertLogs("fixpoint_lab.conditions.checker", level="WARNING"):
            verdict = fp_checker.verify_unique_fixed_point(make_identity(), certificate, [0.0, 0.5, 1.0])
        self.assertEqual(verdict.passing_count, 3)
        self.assertTrue(verdict.contradiction)

    def test_requires_contractive_like_certificate(self):
        certificate = fp_element.ContractiveCertificate(fp_enum.ConditionClass.ZAMFIRESCU,
                                                        {"a": 0.6, "b": 0.3, "c": 0.3}, 1, 0.0)
        with self.assertRaises(ValueError):
            fp_checker.verify_unique_fixed_point(make_half(), certificate, [0.0])


if __name__ == '__main__':
    unittest.main()
