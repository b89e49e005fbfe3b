"""Unit tests for parameter schedules"""

# pylint: disable=missing-class-docstring, missing-function-docstring
import os
import sys
import unittest
import numpy as np
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../../src')))
import fixpoint_lab.enumeration as fp_enum  # noqa E402
import fixpoint_lab.exception as fp_exception  # noqa E402
from fixpoint_lab.schemes.schedule import ParameterSchedule  # noqa E402


class ParameterScheduleTests(unittest.TestCase):

    def test_constant(self):
        schedule = ParameterSchedule.constant(0.5)
        self.assertEqual(schedule.at(0), 0.5)
        self.assertEqual(schedule(100), 0.5)
        self.assertFalse(schedule.is_zero)
        self.assertTrue(ParameterSchedule.constant(0.0).is_zero)

    def test_harmonic(self):
        schedule = ParameterSchedule.harmonic(1.0)
        self.assertEqual(schedule.at(0), 1.0)
        self.assertEqual(schedule.at(1), 0.5)
        np.testing.assert_allclose(schedule.prefix(4), [1.0, 0.5, 1.0 / 3.0, 0.25])

    def test_explicit_repeats_last_value(self):
        schedule = ParameterSchedule.explicit([0.9, 0.5])
        self.assertEqual(schedule.at(0), 0.9)
        self.assertEqual(schedule.at(1), 0.5)
        self.assertEqual(schedule.at(5), 0.5)

    def test_value_one_admitted(self):
        self.assertEqual(ParameterSchedule.constant(1.0).at(3), 1.0)

    def test_values_outside_unit_interval(self):
        with self.assertRaises(fp_exception.InvalidSchedule):
            ParameterSchedule.constant(1.5)
        with self.assertRaises(fp_exception.InvalidSchedule):
            ParameterSchedule.explicit([0.5, -0.1])
        with self.assertRaises(fp_exception.InvalidSchedule):
            ParameterSchedule.harmonic(0.5)
        with self.assertRaises(IndexError):
            ParameterSchedule.constant(0.5).at(-1)

    def test_unknown_kind(self):
        with self.assertRaises(fp_exception.InvalidSchedule):
            ParameterSchedule(fp_enum.GaugeKind.LINEAR, value=0.5)

    def test_floor(self):
        with self.assertRaises(fp_exception.ScheduleFloorViolated):
            ParameterSchedule.constant(0.3, floor=0.5)
        schedule = ParameterSchedule(fp_enum.ScheduleKind.HARMONIC, c=1.0, floor=0.2)
        self.assertEqual(schedule.at(3), 0.25)
        self.assertEqual(schedule.at(4), 0.2)
        with self.assertRaises(fp_exception.ScheduleFloorViolated):
            schedule.at(5)

    def test_parse(self):
        self.assertEqual(ParameterSchedule.parse("0.5"), ParameterSchedule.constant(0.5))
        self.assertEqual(ParameterSchedule.parse("constant:0.25"), ParameterSchedule.constant(0.25))
        self.assertEqual(ParameterSchedule.parse("harmonic:2").at(0), 0.5)
        self.assertEqual(ParameterSchedule.parse("list:0.9,0.5"), ParameterSchedule.explicit([0.9, 0.5]))
        self.assertEqual(ParameterSchedule.parse("0.5", floor=0.5).floor, 0.5)

    def test_parse_errors(self):
        for text in ("abc", "bogus:1", "list:", "2.0"):
            with self.assertRaises(fp_exception.InvalidSchedule):
                ParameterSchedule.parse(text)
        with self.assertRaises(fp_exception.ScheduleFloorViolated):
            ParameterSchedule.parse("0.25", floor=0.5)

    def test_dict_representation(self):
        schedule = ParameterSchedule.explicit([0.9, 0.5], floor=0.5)
        self.assertEqual(schedule.to_dict(), {"kind": "explicit", "list": [0.9, 0.5], "floor": 0.5})
        self.assertEqual(ParameterSchedule.from_dict(schedule.to_dict()), schedule)
        with self.assertRaises(fp_exception.InvalidSchedule):
            ParameterSchedule.from_dict({"kind": "geometric"})


if __name__ == '__main__':
    unittest.main()
