"""
Scheme suites: every scheme of a corollary coupled against Mann from one initial point
"""
import logging
import os
from concurrent.futures import ThreadPoolExecutor
import numpy as np
import numpy.typing as npt
import fixpoint_lab.enumeration as fp_enum
from fixpoint_lab.conditions.element import GaugeFunction, MappingSpec, Norm, as_point
from fixpoint_lab.equivalence.audit import AuditReport, audit_run
from fixpoint_lab.equivalence.coupling import CoupledRun, couple
from fixpoint_lab.schemes.config import SchemeConfig
from fixpoint_lab.schemes.runner import StoppingRule
from fixpoint_lab.schemes.schedule import ParameterSchedule

_logger = logging.getLogger(__name__)

THREADS_ENV = "FIXPOINT_LAB_THREADS"
FIXED_POINT_ERROR_TOLERANCE = 1e-7

COROLLARY1_FAMILIES = [fp_enum.SchemeFamily.PICARD,
                       fp_enum.SchemeFamily.KRASNOSELSKIJ,
                       fp_enum.SchemeFamily.MANN,
                       fp_enum.SchemeFamily.ISHIKAWA,
                       fp_enum.SchemeFamily.NEW_TWO_STEP,
                       fp_enum.SchemeFamily.NOOR,
                       fp_enum.SchemeFamily.SP,
                       fp_enum.SchemeFamily.MULTISTEP_1_5]

COROLLARY2_FAMILIES = COROLLARY1_FAMILIES + [fp_enum.SchemeFamily.NEW_MULTISTEP_1_6,
                                             fp_enum.SchemeFamily.S_ITERATION_1_7]


class SuiteSchedules:
    """
    Shared schedules of a suite.

    betas[i - 1] drives beta^i of every scheme; a single beta schedule is
    repeated as needed. k applies to the generic multistep schemes and lam
    (default alpha_0) is the Krasnoselskij constant.
    """

    def __init__(self,
                 alpha: ParameterSchedule,
                 betas: list[ParameterSchedule],
                 k: int = 3,
                 lam: float | None = None) -> None:
        if k < 2:
            raise ValueError(f"k must be at least 2, got {k}")
        if not betas:
            raise ValueError("At least one beta schedule is required")
        self.alpha = alpha
        self.k = k
        needed = max(2, k - 1)
        self.betas = list(betas) + [betas[-1]] * max(0, needed - len(betas))
        self.lam = alpha.at(0) if lam is None else float(lam)

    def config(self, family: fp_enum.SchemeFamily) -> SchemeConfig:
        """
        Configuration of one suite member
        """
        if family == fp_enum.SchemeFamily.PICARD:
            return SchemeConfig(family)
        if family == fp_enum.SchemeFamily.KRASNOSELSKIJ:
            return SchemeConfig(family, ParameterSchedule.constant(self.lam, self.alpha.floor))
        if family == fp_enum.SchemeFamily.MANN:
            return SchemeConfig(family, self.alpha)
        if family in (fp_enum.SchemeFamily.ISHIKAWA, fp_enum.SchemeFamily.NEW_TWO_STEP,
                      fp_enum.SchemeFamily.S_ITERATION_1_7):
            return SchemeConfig(family, self.alpha, self.betas[:1])
        if family in (fp_enum.SchemeFamily.NOOR, fp_enum.SchemeFamily.SP):
            return SchemeConfig(family, self.alpha, self.betas[:2])
        return SchemeConfig(family, self.alpha, self.betas[:self.k - 1], self.k)


class SuiteRow:
    """
    Summary of one scheme coupled against Mann
    """

    def __init__(self, run: CoupledRun, fixed_point: np.ndarray, audits: list[AuditReport]) -> None:
        self.run = run
        self.scheme = run.scheme_b.name
        self.audits = audits
        self.fp_error = float(run.norm(run.candidate.final_point - fixed_point))
        self.gap_tail = run.gap_tail
        self.iterations = run.candidate.iterations
        self.stop_reason = run.candidate.stop_reason

    @property
    def audits_hold(self) -> bool:
        """True when every applicable audit holds (vacuously without audits)"""
        return all(report.holds for report in self.audits)

    @property
    def passed(self) -> bool:
        """Converged on tolerance to the common fixed point"""
        return (self.stop_reason == fp_enum.StopReason.TOLERANCE
                and self.fp_error <= FIXED_POINT_ERROR_TOLERANCE)

    @property
    def audit_verdict(self) -> str:
        """"pass", "fail" or "n/a" for reports"""
        if not self.audits:
            return "n/a"
        return "pass" if self.audits_hold else "fail"


class SuiteResult:
    """
    Rows in corollary order plus the common fixed point used as reference
    """

    def __init__(self, mapping: MappingSpec, rows: list[SuiteRow], fixed_point: np.ndarray, corollary: int) -> None:
        self.mapping = mapping
        self.rows = rows
        self.fixed_point = fixed_point
        self.corollary = corollary

    @property
    def passed(self) -> bool:
        """All schemes converge to the common fixed point and all audits hold"""
        return all(row.passed and row.audits_hold for row in self.rows)

    @property
    def max_fp_error(self) -> float:
        """Largest fixed-point error over all schemes"""
        return max(row.fp_error for row in self.rows)

    @property
    def max_gap_tail(self) -> float:
        """Largest gap tail over all coupled runs"""
        return max(row.gap_tail for row in self.rows)


def thread_count() -> int:
    """
    Worker count, capped by FIXPOINT_LAB_THREADS when set
    """
    default = os.cpu_count() or 1
    text = os.environ.get(THREADS_ENV, "").strip()
    if not text:
        return default
    try:
        value = int(text)
    except ValueError:
        _logger.warning("Ignoring non-integer %s=%r", THREADS_ENV, text)
        return default
    return max(1, min(value, default))


def run_suite(mapping: MappingSpec,
              x0: npt.ArrayLike,
              schedules: SuiteSchedules,
              stopping: StoppingRule | None = None,
              families: list[fp_enum.SchemeFamily] | None = None,
              delta: float | None = None,
              gauge: GaugeFunction | None = None,
              floor: float | None = None,
              norm: Norm | None = None,
              corollary: int = 2) -> SuiteResult:
    """
    Couples every family against Mann. Runs are independent and execute on a
    thread pool; rows keep the order of families. With delta and gauge given,
    the theorem audits are attached to the rows they apply to.
    """
    if stopping is None:
        stopping = StoppingRule()
    if norm is None:
        norm = Norm.euclidean()
    if families is None:
        families = COROLLARY2_FAMILIES
    reference = schedules.config(fp_enum.SchemeFamily.MANN)
    point = as_point(x0, mapping.dimension)

    def couple_one(family: fp_enum.SchemeFamily) -> CoupledRun:
        return couple(mapping, reference, schedules.config(family), point, stopping, floor, norm)

    with ThreadPoolExecutor(max_workers=thread_count()) as executor:
        runs = list(executor.map(couple_one, families))
    if mapping.known_fixed_point is not None:
        fixed_point = mapping.known_fixed_point
    else:
        fixed_point = runs[families.index(fp_enum.SchemeFamily.MANN)].reference.final_point \
            if fp_enum.SchemeFamily.MANN in families else runs[0].reference.final_point
    rows = []
    for run in runs:
        audits: list[AuditReport] = []
        if delta is not None and gauge is not None:
            audits = audit_run(run, delta, floor, gauge)
        rows.append(SuiteRow(run, fixed_point, audits))
    result = SuiteResult(mapping, rows, fixed_point, corollary)
    _logger.debug("Corollary %d suite on %s: max fp error %.3e, %s", corollary, mapping.label,
                  result.max_fp_error, "PASS" if result.passed else "FAIL")
    return result


def corollary2_suite(mapping: MappingSpec,
                     x0: npt.ArrayLike,
                     schedules: SuiteSchedules,
                     stopping: StoppingRule | None = None,
                     **kwargs) -> SuiteResult:
    """
    Picard, Krasnoselskij, Mann, Ishikawa, new two-step, Noor, SP, multistep, new multistep and S-iteration
    """
    return run_suite(mapping, x0, schedules, stopping, COROLLARY2_FAMILIES, corollary=2, **kwargs)


def corollary1_suite(mapping: MappingSpec,
                     x0: npt.ArrayLike,
                     schedules: SuiteSchedules,
                     stopping: StoppingRule | None = None,
                     **kwargs) -> SuiteResult:
    """
    The eight schemes without the new multistep and S-iteration schemes
    """
    return run_suite(mapping, x0, schedules, stopping, COROLLARY1_FAMILIES, corollary=1, **kwargs)
