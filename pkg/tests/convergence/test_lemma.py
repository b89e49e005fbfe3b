"""Unit tests for recurrence diagnostics"""

# pylint: disable=missing-class-docstring, missing-function-docstring
import os
import sys
import unittest
import numpy as np
from hypothesis import given, settings, strategies as st
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../../src')))
import fixpoint_lab.convergence.lemma as fp_lemma  # noqa E402
import fixpoint_lab.exception as fp_exception  # noqa E402


class RecurrenceWitnessTests(unittest.TestCase):

    def test_length(self):
        witness = fp_lemma.RecurrenceWitness(np.ones(11), np.full(10, 0.5), np.zeros(10))
        self.assertEqual(witness.length, 10)

    def test_malformed(self):
        with self.assertRaises(fp_exception.MalformedWitness):
            fp_lemma.RecurrenceWitness(np.ones(10), np.full(10, 0.5), np.zeros(10))
        with self.assertRaises(fp_exception.MalformedWitness):
            fp_lemma.RecurrenceWitness(-np.ones(11), np.full(10, 0.5), np.zeros(10))
        with self.assertRaises(fp_exception.MalformedWitness):
            fp_lemma.RecurrenceWitness(np.ones(11), np.full(10, 1.0), np.zeros(10))
        with self.assertRaises(fp_exception.MalformedWitness):
            fp_lemma.RecurrenceWitness(np.ones(11), np.full(10, 0.5), np.full(10, np.inf))

    def test_too_short_for_a_verdict(self):
        witness = fp_lemma.RecurrenceWitness(np.zeros(8), np.full(7, 0.5), np.zeros(7))
        with self.assertRaises(fp_exception.MalformedWitness):
            fp_lemma.check_lemma1(witness)


class CheckLemmaTests(unittest.TestCase):

    def test_geometric_forcing(self):
        steps = np.arange(100)
        witness = fp_lemma.simulate_recurrence(1.0, np.full(100, 0.5), 0.75 ** steps)
        self.assertEqual(witness.a[1], 1.5)
        verdict = fp_lemma.check_lemma1(witness, slack=0.0)
        self.assertTrue(verdict.recurrence_holds)
        self.assertIsNone(verdict.first_violation)
        self.assertTrue(verdict.consistent)
        self.assertEqual(verdict.mu_divergence_proxy, 50.0)
        self.assertAlmostEqual(verdict.rho_little_o, 2.0 * 0.75 ** 75)
        self.assertEqual(verdict.rho_ratio_head, 2.0)
        self.assertEqual(verdict.a_head, 1.5)

    def test_zero_sequence(self):
        witness = fp_lemma.RecurrenceWitness(np.zeros(21), np.full(20, 0.5), np.zeros(20))
        verdict = fp_lemma.check_lemma1(witness)
        self.assertTrue(verdict.consistent)
        self.assertEqual(verdict.a_tail, 0.0)

    def test_violation(self):
        witness = fp_lemma.RecurrenceWitness(np.ones(21), np.full(20, 0.5), np.zeros(20))
        verdict = fp_lemma.check_lemma1(witness)
        self.assertFalse(verdict.recurrence_holds)
        self.assertEqual(verdict.first_violation, 0)
        self.assertFalse(verdict.consistent)
        self.assertFalse(verdict.to_dict()["consistent"])

    def test_stagnating_tail_is_not_consistent(self):
        mu = np.full(40, 0.5)
        rho = np.full(40, 0.5)
        verdict = fp_lemma.check_lemma1(fp_lemma.simulate_recurrence(1.0, mu, rho), slack=0.0)
        self.assertTrue(verdict.recurrence_holds)
        self.assertFalse(verdict.tail_decays)
        self.assertFalse(verdict.consistent)

    def test_seeded_families_recompute(self):
        for seed in range(20):
            rng = np.random.default_rng(seed)
            count = int(rng.integers(8, 200))
            mu = rng.uniform(0.05, 0.95, size=count)
            rho = mu * rng.uniform(0.0, 1.0) * 0.9 ** np.arange(count)
            witness = fp_lemma.simulate_recurrence(float(rng.uniform(0.0, 10.0)), mu, rho)
            verdict = fp_lemma.check_lemma1(witness, slack=0.0)
            self.assertTrue(verdict.recurrence_holds)
            quarter = max(1, count // 4)
            ratio = [r / m for r, m in zip(rho, mu)]
            self.assertAlmostEqual(verdict.mu_divergence_proxy, sum(mu), delta=1e-12)
            self.assertAlmostEqual(verdict.rho_little_o, max(ratio[-quarter:]), delta=1e-14)
            self.assertAlmostEqual(verdict.rho_ratio_head, max(ratio[:quarter]), delta=1e-14)
            self.assertAlmostEqual(verdict.a_head, max(witness.a[:quarter]), delta=1e-14)
            self.assertAlmostEqual(verdict.a_tail, max(witness.a[-quarter:]), delta=1e-14)

    @settings(max_examples=50, deadline=None)
    @given(st.floats(min_value=0.0, max_value=100.0),
           st.lists(st.tuples(st.floats(min_value=0.01, max_value=0.99), st.floats(min_value=0.0, max_value=10.0)),
                    min_size=8, max_size=60))
    def test_simulated_recurrence_holds(self, a0, terms):
        mu = [m for m, _ in terms]
        rho = [r for _, r in terms]
        verdict = fp_lemma.check_lemma1(fp_lemma.simulate_recurrence(a0, mu, rho), slack=0.0)
        self.assertTrue(verdict.recurrence_holds)


if __name__ == '__main__':
    unittest.main()
