"""
Per-step audits of the gap inequalities behind the equivalence results

Every audit compares gap_{n+1} with a right-hand side rebuilt from the
recorded iterates, parameters and intermediates, using
c = 1 - A(1 - delta) as the contraction factor of the gap.
"""
import logging
import numpy as np
import fixpoint_lab.base as fp_base
import fixpoint_lab.enumeration as fp_enum
import fixpoint_lab.exception as fp_exception
from fixpoint_lab.conditions.element import GaugeFunction
from fixpoint_lab.convergence.lemma import RecurrenceWitness
from fixpoint_lab.equivalence.coupling import CoupledRun
from fixpoint_lab.schemes.config import SchemeConfig

_logger = logging.getLogger(__name__)

MANN_FAMILIES = frozenset([fp_enum.SchemeFamily.MANN,
                           fp_enum.SchemeFamily.KRASNOSELSKIJ,
                           fp_enum.SchemeFamily.PICARD])

NEW_MULTISTEP_FAMILIES = frozenset([fp_enum.SchemeFamily.NEW_MULTISTEP_1_6,
                                    fp_enum.SchemeFamily.NEW_TWO_STEP,
                                    fp_enum.SchemeFamily.SP])


class AuditReport:
    """
    lhs[n] = gap_{n+1} and rhs[n] for every audited step n; margins = rhs - lhs
    """

    def __init__(self,
                 inequality_id: fp_enum.InequalityId,
                 gaps: np.ndarray,
                 rhs: np.ndarray,
                 tolerance: float = fp_base.AUDIT_SLACK) -> None:
        self.inequality_id = inequality_id
        self.gaps = np.asarray(gaps, dtype=np.float64)
        self.lhs = self.gaps[1:]
        self.rhs = np.asarray(rhs, dtype=np.float64)
        self.tolerance = tolerance
        self.margins = self.rhs - self.lhs
        failing = np.flatnonzero(self.margins < -tolerance)
        self.first_violation: int | None = int(failing[0]) if len(failing) > 0 else None

    @property
    def name(self) -> str:
        """Inequality name as used in reports"""
        return fp_enum.enum_to_str(self.inequality_id)

    @property
    def holds(self) -> bool:
        """No step violates the inequality"""
        return self.first_violation is None

    @property
    def min_margin(self) -> float:
        """Tightest margin, +inf for an empty audit"""
        return float(np.min(self.margins)) if len(self.margins) > 0 else float("inf")

    def to_dict(self) -> dict:
        """Report representation"""
        return {"inequality": self.name,
                "holds": self.holds,
                "first_violation": self.first_violation,
                "min_margin": self.min_margin,
                "tolerance": self.tolerance,
                "lhs": self.lhs.tolist(),
                "rhs": self.rhs.tolist(),
                "margins": self.margins.tolist()}


def is_mann_like(config: SchemeConfig) -> bool:
    """
    Mann iteration, directly or as the multistep scheme with k = 2 and beta^1 == 0
    """
    if config.family in MANN_FAMILIES:
        return True
    return (config.family == fp_enum.SchemeFamily.MULTISTEP_1_5 and config.k == 2 and config.betas[0].is_zero)


def _prepare(run: CoupledRun, floor: float | None, delta: float, candidate_families: frozenset) -> tuple[float, float]:
    if not is_mann_like(run.scheme_a):
        raise fp_exception.SchemeMismatch(f"Reference scheme must be Mann, got {run.scheme_a.name}")
    if run.scheme_b.family not in candidate_families:
        raise fp_exception.SchemeMismatch(f"Audit does not apply to {run.scheme_b.name}")
    if not run.shared_alpha:
        raise fp_exception.SchemeMismatch("Coupled schemes do not share their alpha values")
    if run.candidate.intermediates is None:
        raise fp_exception.SchemeMismatch("Coupled run lacks recorded intermediates")
    if not 0.0 <= delta < 1.0:
        raise fp_exception.InvalidConstants(f"delta must lie in [0, 1), got {delta}")
    if floor is None:
        floor = run.floor
    if not 0.0 <= floor <= 1.0:
        raise fp_exception.InvalidConstants(f"Floor must lie in [0, 1], got {floor}")
    alphas = run.candidate.alphas
    if len(alphas) > 0 and float(np.min(alphas)) < floor:
        raise fp_exception.ScheduleFloorViolated(f"Some alpha_n is below the floor {floor}")
    return floor, 1.0 - floor * (1.0 - delta)


def _residual(run: CoupledRun, point: np.ndarray) -> float:
    return run.norm(point - run.mapping.evaluate(point))


def _report(run: CoupledRun, inequality_id: fp_enum.InequalityId, rhs: list[float], slack: float) -> AuditReport:
    report = AuditReport(inequality_id, run.gap, rhs, slack)
    if not report.holds:
        _logger.debug("%s on %s violated at n=%d", report.name, run.mapping.label, report.first_violation)
    return report


def audit_theorem1_forward(run: CoupledRun,
                           delta: float,
                           floor: float | None,
                           gauge: GaugeFunction,
                           slack: float = fp_base.AUDIT_SLACK) -> AuditReport:
    """
    ||u_{n+1} - x_{n+1}|| <= c||u_n - x_n|| + c*S_n*(r_n + phi(r_n)) + alpha_n*phi(r_n)

    with r_n = ||u_n - Tu_n|| and S_n = sum_{i=1}^{k-1} beta^i prod_{j<i} [1 - beta^j(1 - delta)].
    """
    _, c = _prepare(run, floor, delta, NEW_MULTISTEP_FAMILIES)
    rhs = []
    for n in range(run.iterations):
        r_u = float(run.reference.residuals[n])
        phi_r = gauge(r_u)
        betas = run.candidate.betas[n]
        total = 0.0
        product = 1.0
        for i in range(1, len(betas) + 1):
            total += betas[i - 1] * product
            product *= 1.0 - betas[i - 1] * (1.0 - delta)
        alpha = float(run.candidate.alphas[n])
        rhs.append(c * run.gap[n] + c * total * (r_u + phi_r) + alpha * phi_r)
    return _report(run, fp_enum.InequalityId.T1_FORWARD_2_9, rhs, slack)


def audit_theorem1_backward(run: CoupledRun,
                            delta: float,
                            floor: float | None,
                            gauge: GaugeFunction,
                            slack: float = fp_base.AUDIT_SLACK) -> AuditReport:
    """
    ||x_{n+1} - u_{n+1}|| <= c||x_n - u_n|| + c*sum_{i=1}^{k-1} beta^i ||z^{i+1} - Tz^{i+1}||
                              + alpha_n*phi(||y^1 - Ty^1||)

    where z^i = y^i for i < k and z^k = x_n.
    """
    _, c = _prepare(run, floor, delta, NEW_MULTISTEP_FAMILIES)
    rhs = []
    for n in range(run.iterations):
        levels = list(run.candidate.intermediates[n]) + [run.candidate.iterates[n]]
        betas = run.candidate.betas[n]
        total = 0.0
        for i in range(1, len(betas) + 1):
            total += betas[i - 1] * _residual(run, levels[i])
        alpha = float(run.candidate.alphas[n])
        rhs.append(c * run.gap[n] + c * total + alpha * gauge(_residual(run, levels[0])))
    return _report(run, fp_enum.InequalityId.T1_BACKWARD_2_18, rhs, slack)


def audit_theorem2_forward(run: CoupledRun,
                           delta: float,
                           floor: float | None,
                           gauge: GaugeFunction,
                           slack: float = fp_base.AUDIT_SLACK) -> AuditReport:
    """
    ||u_{n+1} - x_{n+1}|| <= c||u_n - x_n|| + c*r_n + (1 + alpha_n*beta_n*delta)*phi(r_n)
    with r_n = ||u_n - Tu_n||
    """
    _, c = _prepare(run, floor, delta, frozenset([fp_enum.SchemeFamily.S_ITERATION_1_7]))
    rhs = []
    for n in range(run.iterations):
        r_u = float(run.reference.residuals[n])
        alpha = float(run.candidate.alphas[n])
        beta = float(run.candidate.betas[n][0])
        rhs.append(c * run.gap[n] + c * r_u + (1.0 + alpha * beta * delta) * gauge(r_u))
    return _report(run, fp_enum.InequalityId.T2_FORWARD_2_28, rhs, slack)


def audit_theorem2_backward(run: CoupledRun,
                            delta: float,
                            floor: float | None,
                            gauge: GaugeFunction,
                            slack: float = fp_base.AUDIT_SLACK) -> AuditReport:
    """
    ||u_{n+1} - x_{n+1}|| <= c||x_n - u_n|| + c||Tx_n - x_n|| + alpha_n*phi(||y_n - Ty_n||)
    """
    _, c = _prepare(run, floor, delta, frozenset([fp_enum.SchemeFamily.S_ITERATION_1_7]))
    rhs = []
    for n in range(run.iterations):
        r_x = float(run.candidate.residuals[n])
        y = run.candidate.intermediates[n][0]
        alpha = float(run.candidate.alphas[n])
        rhs.append(c * run.gap[n] + c * r_x + alpha * gauge(_residual(run, y)))
    return _report(run, fp_enum.InequalityId.T2_BACKWARD_2_34, rhs, slack)


AUDITS_BY_THEOREM = {
    1: (audit_theorem1_forward, audit_theorem1_backward),
    2: (audit_theorem2_forward, audit_theorem2_backward),
}


def applicable_theorem(run: CoupledRun) -> int | None:
    """
    1 or 2 if an audited theorem covers the pair of schemes, otherwise None
    """
    if not is_mann_like(run.scheme_a):
        return None
    if run.scheme_b.family in NEW_MULTISTEP_FAMILIES:
        return 1
    if run.scheme_b.family == fp_enum.SchemeFamily.S_ITERATION_1_7:
        return 2
    return None


def audit_run(run: CoupledRun,
              delta: float,
              floor: float | None,
              gauge: GaugeFunction,
              slack: float = fp_base.AUDIT_SLACK) -> list[AuditReport]:
    """
    Forward and backward audits of the theorem covering the run, empty if none applies
    """
    theorem = applicable_theorem(run)
    if theorem is None:
        return []
    return [audit(run, delta, floor, gauge, slack) for audit in AUDITS_BY_THEOREM[theorem]]


def report_to_witness(report: AuditReport, delta: float, floor: float) -> RecurrenceWitness:
    """
    Recurrence witness a_n = gap_n, mu_n = A(1 - delta), rho_n = rhs_n - (1 - mu_n) a_n
    (clipped at zero against rounding)
    """
    mu = floor * (1.0 - delta)
    if not 0.0 < mu < 1.0:
        raise fp_exception.MalformedWitness(f"A(1 - delta) must lie in (0, 1), got {mu}")
    mus = np.full(len(report.rhs), mu)
    rho = np.maximum(report.rhs - (1.0 - mus) * report.gaps[:-1], 0.0)
    return RecurrenceWitness(report.gaps, mus, rho)
