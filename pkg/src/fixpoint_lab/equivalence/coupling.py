"""
Coupled runs: two schemes advanced in lockstep from one initial point
"""
import logging
import numpy as np
import numpy.typing as npt
import fixpoint_lab.enumeration as fp_enum
import fixpoint_lab.exception as fp_exception
from fixpoint_lab.conditions.element import MappingSpec, Norm, as_point
from fixpoint_lab.schemes.config import SchemeConfig
from fixpoint_lab.schemes.runner import StoppingRule, Trajectory, TrajectoryBuilder, iterate

_logger = logging.getLogger(__name__)

DEFAULT_AGREEMENT_TOLERANCE = 1e-6
GAP_TAIL_FRACTION = 0.1


class CoupledRun:
    """
    Reference trajectory u_n (scheme_a, usually Mann) and candidate x_n
    (scheme_b) of equal length with gap_n = ||u_n - x_n||
    """

    def __init__(self,
                 mapping: MappingSpec,
                 reference: Trajectory,
                 candidate: Trajectory,
                 x0: npt.ArrayLike,
                 floor: float,
                 stopping: StoppingRule,
                 norm: Norm,
                 agreement_tol: float = DEFAULT_AGREEMENT_TOLERANCE) -> None:
        if len(reference) != len(candidate):
            raise ValueError("Coupled trajectories must have equal length")
        self.mapping = mapping
        self.reference = reference
        self.candidate = candidate
        self.x0 = as_point(x0)
        self.floor = floor
        self.stopping = stopping
        self.norm = norm
        self.agreement_tol = agreement_tol
        self.gap = np.atleast_1d(norm(reference.iterates - candidate.iterates))
        self.shared_alpha = bool(np.array_equal(reference.alphas, candidate.alphas))
        self.outcome = self._classify()

    @property
    def scheme_a(self) -> SchemeConfig:
        """Reference scheme"""
        return self.reference.scheme

    @property
    def scheme_b(self) -> SchemeConfig:
        """Candidate scheme"""
        return self.candidate.scheme

    @property
    def iterations(self) -> int:
        """Number of lockstep steps"""
        return len(self.gap) - 1

    @property
    def final_gap(self) -> float:
        """||u_N - x_N||"""
        return float(self.gap[-1])

    @property
    def gap_tail(self) -> float:
        """Largest gap over the last tenth of the run (at least one entry)"""
        count = max(1, int(np.ceil(GAP_TAIL_FRACTION * len(self.gap))))
        return float(np.max(self.gap[-count:]))

    def _classify(self) -> fp_enum.CoupledOutcome:
        both = self.reference.converged and self.candidate.converged
        if both and self.final_gap <= self.agreement_tol:
            return fp_enum.CoupledOutcome.BOTH_CONVERGED
        if self.gap_tail <= self.agreement_tol:
            return fp_enum.CoupledOutcome.GAP_VANISHING
        if self.reference.converged or self.candidate.converged:
            _logger.warning("%s: %s vs %s, gap stagnates at %.3e while one scheme converged",
                            self.mapping.label, self.scheme_a.name, self.scheme_b.name, self.gap_tail)
            return fp_enum.CoupledOutcome.COUNTEREXAMPLE
        return fp_enum.CoupledOutcome.UNDECIDED


def _finish_reason(builder: TrajectoryBuilder, stopping: StoppingRule, diverged: bool) -> fp_enum.StopReason:
    if builder.residuals[-1] <= stopping.tol:
        return fp_enum.StopReason.TOLERANCE
    if diverged:
        return fp_enum.StopReason.DIVERGENCE_GUARD
    return fp_enum.StopReason.MAX_ITERS


def _check_floor(trajectory: Trajectory, floor: float) -> None:
    if floor > 0.0 and len(trajectory.alphas) > 0:
        smallest = float(np.min(trajectory.alphas))
        if smallest < floor:
            index = int(np.argmin(trajectory.alphas))
            raise fp_exception.ScheduleFloorViolated(
                f"{trajectory.scheme.name}: alpha_{index} = {smallest} is below the floor {floor}")


def couple(mapping: MappingSpec,
           scheme_a: SchemeConfig,
           scheme_b: SchemeConfig,
           x0: npt.ArrayLike,
           stopping: StoppingRule | None = None,
           floor: float | None = None,
           norm: Norm | None = None,
           agreement_tol: float = DEFAULT_AGREEMENT_TOLERANCE) -> CoupledRun:
    """
    Runs both schemes from x0 until both residuals are at or below tol, until
    max_iters lockstep steps or until one iterate passes the divergence bound.
    Intermediates are recorded for every step so the run can be audited.

    floor defaults to the larger declared alpha floor of the two schemes;
    every emitted alpha_n of both schemes must respect it.
    """
    if stopping is None:
        stopping = StoppingRule()
    if norm is None:
        norm = Norm.euclidean()
    if floor is None:
        floor = max(scheme_a.alpha.floor, scheme_b.alpha.floor)
    builder_a = TrajectoryBuilder(mapping, scheme_a, norm, True)
    builder_b = TrajectoryBuilder(mapping, scheme_b, norm, True)
    previous_a = previous_b = None
    diverged = False
    for state_a, state_b in zip(iterate(mapping, scheme_a, x0, norm), iterate(mapping, scheme_b, x0, norm)):
        builder_a.add(state_a, previous_a)
        builder_b.add(state_b, previous_b)
        if state_a.residual <= stopping.tol and state_b.residual <= stopping.tol:
            break
        if norm(state_a.point) > stopping.divergence_bound or norm(state_b.point) > stopping.divergence_bound:
            diverged = True
            break
        if state_a.n >= stopping.max_iters:
            break
        previous_a, previous_b = state_a, state_b
    reference = builder_a.finish(_finish_reason(builder_a, stopping, diverged))
    candidate = builder_b.finish(_finish_reason(builder_b, stopping, diverged))
    _check_floor(reference, floor)
    _check_floor(candidate, floor)
    run = CoupledRun(mapping, reference, candidate, x0, floor, stopping, norm, agreement_tol)
    _logger.debug("%s: %s vs %s, %d steps, final gap %.3e, %s", mapping.label, scheme_a.name, scheme_b.name,
                  run.iterations, run.final_gap, fp_enum.enum_to_str(run.outcome))
    return run
