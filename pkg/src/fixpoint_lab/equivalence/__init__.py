"""
Equivalence experiments

Coupled runs, per-step audits of the gap inequalities and the scheme suites.
"""
from fixpoint_lab.equivalence.coupling import CoupledRun, couple
from fixpoint_lab.equivalence.audit import (AuditReport, audit_theorem1_forward, audit_theorem1_backward,
                                            audit_theorem2_forward, audit_theorem2_backward, audit_run,
                                            applicable_theorem, report_to_witness)
from fixpoint_lab.equivalence.suite import (SuiteSchedules, SuiteRow, SuiteResult, run_suite, corollary1_suite,
                                            corollary2_suite)

__all__ = ["CoupledRun", "couple", "AuditReport", "audit_theorem1_forward", "audit_theorem1_backward",
           "audit_theorem2_forward", "audit_theorem2_backward", "audit_run", "applicable_theorem",
           "report_to_witness", "SuiteSchedules", "SuiteRow", "SuiteResult", "run_suite", "corollary1_suite",
           "corollary2_suite"]
