"""
Convergence diagnostics
"""
from fixpoint_lab.convergence.lemma import RecurrenceWitness, LemmaVerdict, check_lemma1, simulate_recurrence
from fixpoint_lab.convergence.bounds import BoundReport, residual_decay_bound, y_residual_bound

__all__ = ["RecurrenceWitness", "LemmaVerdict", "check_lemma1", "simulate_recurrence", "BoundReport",
           "residual_decay_bound", "y_residual_bound"]
