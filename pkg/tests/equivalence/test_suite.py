"""Unit tests for scheme suites"""

# pylint: disable=missing-class-docstring, missing-function-docstring
import os
import sys
import unittest
from unittest import mock
import numpy as np
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../../src')))
import fixpoint_lab.enumeration as fp_enum  # noqa E402
import fixpoint_lab.equivalence.suite as fp_suite  # noqa E402
from fixpoint_lab.conditions.element import Box, GaugeFunction, MappingSpec  # noqa E402
from fixpoint_lab.convergence.bounds import residual_decay_bound  # noqa E402
from fixpoint_lab.corpus.workspace import Workspace  # noqa E402
from fixpoint_lab.schemes.schedule import ParameterSchedule  # noqa E402

Family = fp_enum.SchemeFamily
HALF = ParameterSchedule.constant(0.5)


def make_half():
    return MappingSpec.scalar_formula("half", Box(0.0, 1.0), scale=0.5, known_fixed_point=0.0)


def make_affine():
    return MappingSpec.affine("affine_2d", [[0.8, 0.0], [0.0, 0.5]], [0.2, 0.5], Box([0.0, 0.0], [2.0, 2.0]),
                              known_fixed_point=[1.0, 1.0])


class SuiteSchedulesTests(unittest.TestCase):

    def test_padding_and_lambda(self):
        schedules = fp_suite.SuiteSchedules(HALF, [ParameterSchedule.constant(0.25)], k=4)
        self.assertEqual(len(schedules.betas), 3)
        self.assertEqual(schedules.lam, 0.5)
        self.assertEqual(schedules.config(Family.NEW_MULTISTEP_1_6).k, 4)
        self.assertEqual(schedules.config(Family.SP).betas_at(0), [0.25, 0.25])
        self.assertEqual(schedules.config(Family.KRASNOSELSKIJ).alpha_at(9), 0.5)
        self.assertEqual(schedules.config(Family.PICARD).alpha_at(0), 1.0)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            fp_suite.SuiteSchedules(HALF, [], k=3)
        with self.assertRaises(ValueError):
            fp_suite.SuiteSchedules(HALF, [HALF], k=1)


class CorollarySuiteTests(unittest.TestCase):

    def check_suite(self, mapping, x0, delta, gauge):
        schedules = fp_suite.SuiteSchedules(HALF, [HALF], k=3)
        result = fp_suite.corollary2_suite(mapping, x0, schedules, delta=delta, gauge=gauge, floor=0.5)
        self.assertEqual([row.scheme for row in result.rows],
                         [fp_enum.enum_to_str(family) for family in fp_suite.COROLLARY2_FAMILIES])
        self.assertTrue(result.passed)
        self.assertLessEqual(result.max_fp_error, 1e-7)
        self.assertLess(result.max_gap_tail, 1e-6)
        for row in result.rows:
            self.assertEqual(row.stop_reason, fp_enum.StopReason.TOLERANCE)
            for trajectory in (row.run.reference, row.run.candidate):
                self.assertTrue(residual_decay_bound(trajectory, delta, mapping.known_fixed_point).holds)
        self.assertTrue(all(row.audits_hold for row in result.rows))
        verdicts = {row.scheme: row.audit_verdict for row in result.rows}
        for name in ("new_two_step", "sp", "new_multistep_1_6", "s_iteration_1_7"):
            self.assertEqual(verdicts[name], "pass")
        for name in ("picard", "ishikawa", "noor", "multistep_1_5"):
            self.assertEqual(verdicts[name], "n/a")
        return result

    def test_half(self):
        result = self.check_suite(make_half(), [1.0], 0.5, GaugeFunction.linear(0.01))
        self.assertEqual(result.corollary, 2)
        np.testing.assert_array_equal(result.fixed_point, [0.0])

    def test_affine(self):
        self.check_suite(make_affine(), [0.0, 0.0], 0.8, GaugeFunction.linear(1.0))

    def test_corpus_maps(self):
        workspace = Workspace.from_corpus()
        for label in ("shifted_half", "cosine", "piecewise"):
            mapping = workspace.find(label)
            with self.subTest(map=label):
                self.check_suite(mapping, mapping.domain.hi, mapping.certificate["delta"],
                                 mapping.certificate["gauge"])

    def test_corollary1_members(self):
        schedules = fp_suite.SuiteSchedules(HALF, [HALF])
        result = fp_suite.corollary1_suite(make_half(), [1.0], schedules)
        self.assertEqual(len(result.rows), 8)
        self.assertEqual(result.corollary, 1)
        self.assertTrue(result.passed)
        self.assertTrue(all(row.audit_verdict == "n/a" for row in result.rows))

    def test_unknown_fixed_point_uses_mann_limit(self):
        mapping = MappingSpec.scalar_formula("cosine", Box(0.0, 1.0), "cos")
        result = fp_suite.corollary1_suite(mapping, [1.0], fp_suite.SuiteSchedules(HALF, [HALF]))
        self.assertAlmostEqual(float(result.fixed_point[0]), 0.7390851332151607, places=9)
        self.assertTrue(result.passed)


class ThreadCountTests(unittest.TestCase):

    def test_environment_cap(self):
        with mock.patch.dict(os.environ, {fp_suite.THREADS_ENV: "1"}):
            self.assertEqual(fp_suite.thread_count(), 1)
        with mock.patch.dict(os.environ, {fp_suite.THREADS_ENV: "many"}):
            self.assertEqual(fp_suite.thread_count(), os.cpu_count() or 1)

    def test_single_thread_gives_same_rows(self):
        schedules = fp_suite.SuiteSchedules(HALF, [HALF])
        with mock.patch.dict(os.environ, {fp_suite.THREADS_ENV: "1"}):
            serial = fp_suite.corollary2_suite(make_half(), [1.0], schedules)
        parallel = fp_suite.corollary2_suite(make_half(), [1.0], schedules)
        for first, second in zip(serial.rows, parallel.rows):
            np.testing.assert_array_equal(first.run.gap, second.run.gap)


if __name__ == '__main__':
    unittest.main()
