"""Unit tests for coupled runs"""

# pylint: disable=missing-class-docstring, missing-function-docstring
import os
import sys
import unittest
import numpy as np
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../../src')))
import fixpoint_lab.enumeration as fp_enum  # noqa E402
import fixpoint_lab.exception as fp_exception  # noqa E402
from fixpoint_lab.conditions.element import Box, MappingSpec  # noqa E402
from fixpoint_lab.equivalence.coupling import couple  # noqa E402
from fixpoint_lab.schemes.config import SchemeConfig  # noqa E402
from fixpoint_lab.schemes.runner import StoppingRule  # noqa E402
from fixpoint_lab.schemes.schedule import ParameterSchedule  # noqa E402

Family = fp_enum.SchemeFamily
Outcome = fp_enum.CoupledOutcome
HALF = ParameterSchedule.constant(0.5)
MANN = SchemeConfig(Family.MANN, HALF)


def make_half():
    return MappingSpec.scalar_formula("half", Box(0.0, 1.0), scale=0.5, known_fixed_point=0.0)


def make_affine():
    return MappingSpec.affine("affine_2d", [[0.8, 0.0], [0.0, 0.5]], [0.2, 0.5], Box([0.0, 0.0], [2.0, 2.0]),
                              known_fixed_point=[1.0, 1.0])


class CoupleTests(unittest.TestCase):

    def test_mann_against_new_multistep(self):
        candidate = SchemeConfig(Family.NEW_MULTISTEP_1_6, HALF, [HALF, HALF], k=3)
        run = couple(make_half(), MANN, candidate, [1.0])
        self.assertEqual(run.outcome, Outcome.BOTH_CONVERGED)
        self.assertLess(run.final_gap, 1e-9)
        self.assertLessEqual(run.iterations, 120)
        self.assertTrue(run.shared_alpha)
        self.assertEqual(len(run.reference), len(run.candidate))
        self.assertEqual(len(run.gap), run.iterations + 1)
        self.assertEqual(len(run.candidate.intermediates), run.iterations)
        self.assertEqual(run.gap[0], 0.0)
        self.assertEqual(run.gap[1], 0.75 - 0.421875)

    def test_mann_against_s_iteration_on_affine_map(self):
        candidate = SchemeConfig(Family.S_ITERATION_1_7, HALF, [HALF])
        run = couple(make_affine(), MANN, candidate, [0.0, 0.0])
        self.assertGreater(len(run.gap), 200)
        self.assertLess(run.gap[200], 1e-8)
        self.assertEqual(run.outcome, Outcome.BOTH_CONVERGED)
        np.testing.assert_allclose(run.candidate.final_point, [1.0, 1.0], atol=1e-8)

    def test_start_at_fixed_point(self):
        candidate = SchemeConfig(Family.SP, HALF, [HALF, HALF])
        run = couple(make_half(), MANN, candidate, [0.0])
        self.assertEqual(run.iterations, 0)
        np.testing.assert_array_equal(run.gap, [0.0])
        self.assertEqual(run.outcome, Outcome.BOTH_CONVERGED)

    def test_alpha_sharing(self):
        run = couple(make_half(), MANN, SchemeConfig(Family.PICARD), [1.0])
        self.assertFalse(run.shared_alpha)
        self.assertEqual(run.outcome, Outcome.BOTH_CONVERGED)

    def test_floor_violation(self):
        mann = SchemeConfig(Family.MANN, ParameterSchedule.harmonic(1.0))
        ishikawa = SchemeConfig(Family.ISHIKAWA, ParameterSchedule.harmonic(1.0), [HALF])
        with self.assertRaises(fp_exception.ScheduleFloorViolated):
            couple(make_half(), mann, ishikawa, [1.0], StoppingRule(max_iters=10), floor=0.4)

    def test_declared_floor_is_default(self):
        alpha = ParameterSchedule.constant(0.6, floor=0.5)
        run = couple(make_half(), SchemeConfig(Family.MANN, alpha), SchemeConfig(Family.ISHIKAWA, alpha, [HALF]),
                     [1.0])
        self.assertEqual(run.floor, 0.5)


class OutcomeTests(unittest.TestCase):

    def test_counterexample(self):
        frozen = SchemeConfig(Family.MANN, ParameterSchedule.constant(0.0))
        with self.assertLogs("fixpoint_lab.equivalence.coupling", level="WARNING"):
            run = couple(make_half(), frozen, SchemeConfig(Family.PICARD), [1.0], StoppingRule(max_iters=50))
        self.assertEqual(run.outcome, Outcome.COUNTEREXAMPLE)
        self.assertEqual(run.iterations, 50)
        self.assertTrue(run.candidate.converged)
        self.assertFalse(run.reference.converged)

    def test_gap_vanishing(self):
        frozen = SchemeConfig(Family.MANN, ParameterSchedule.constant(0.0))
        run = couple(make_half(), frozen, frozen, [1.0], StoppingRule(max_iters=5))
        self.assertEqual(run.outcome, Outcome.GAP_VANISHING)
        self.assertEqual(run.gap_tail, 0.0)

    def test_undecided(self):
        frozen = SchemeConfig(Family.MANN, ParameterSchedule.constant(0.0))
        run = couple(make_half(), frozen, SchemeConfig(Family.PICARD), [1.0], StoppingRule(max_iters=1))
        self.assertEqual(run.outcome, Outcome.UNDECIDED)
        self.assertEqual(run.final_gap, 0.5)


if __name__ == '__main__':
    unittest.main()
