"""
Iteration schemes

Generic multistep engines, their named reductions and trajectory runs.
"""
from fixpoint_lab.schemes.schedule import ParameterSchedule
from fixpoint_lab.schemes.config import SchemeConfig, expand_reduction, REDUCTION_TABLE
from fixpoint_lab.schemes.engine import (StepResult, step, step_multistep_1_5, step_new_multistep_1_6,
                                         step_s_iteration, step_picard, step_mann, step_ishikawa, step_noor,
                                         step_new_two_step, step_sp)
from fixpoint_lab.schemes.runner import StoppingRule, IterationState, Trajectory, iterate, run

__all__ = ["ParameterSchedule", "SchemeConfig", "expand_reduction", "REDUCTION_TABLE", "StepResult", "step",
           "step_multistep_1_5", "step_new_multistep_1_6", "step_s_iteration", "step_picard", "step_mann",
           "step_ishikawa", "step_noor", "step_new_two_step", "step_sp", "StoppingRule", "IterationState",
           "Trajectory", "iterate", "run"]
