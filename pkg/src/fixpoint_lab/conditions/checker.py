"""
Certification of contractive conditions over finite sample sets

Every check_* function evaluates both sides of its inequality for all ordered
sample pairs at once and either returns a ContractiveCertificate or the first
violating pair (in sample order).
"""
import logging
import numpy as np
import numpy.typing as npt
import fixpoint_lab.base as fp_base
import fixpoint_lab.enumeration as fp_enum
import fixpoint_lab.exception as fp_exception
from fixpoint_lab.conditions.element import (MappingSpec, Norm, GaugeFunction, ContractiveCertificate,
                                             ConditionViolation, CertificateOrViolation, UniquenessVerdict)
from fixpoint_lab.conditions.sampling import SampleSet

_logger = logging.getLogger(__name__)


class _PairTerms:
    """
    Norm terms shared by all conditions, one entry per sample pair
    """

    def __init__(self, mapping: MappingSpec, norm: Norm, samples: SampleSet) -> None:
        tx = mapping.evaluate(samples.xs)
        ty = mapping.evaluate(samples.ys)
        self.images = norm(tx - ty)               # ||Tx - Ty||
        self.distance = norm(samples.xs - samples.ys)  # ||x - y||
        self.x_residual = norm(samples.xs - tx)   # ||x - Tx||
        self.y_residual = norm(samples.ys - ty)   # ||y - Ty||
        self.x_to_ty = norm(samples.xs - ty)      # ||x - Ty||
        self.y_to_tx = norm(samples.ys - tx)      # ||y - Tx||


def _check_zamfirescu_constants(a: float, b: float, c: float) -> None:
    if not 0.0 < a < 1.0:
        raise fp_exception.InvalidConstants(f"Zamfirescu constant a must lie in (0, 1), got {a}")
    if not 0.0 < b < 0.5:
        raise fp_exception.InvalidConstants(f"Zamfirescu constant b must lie in (0, 1/2), got {b}")
    if not 0.0 < c < 0.5:
        raise fp_exception.InvalidConstants(f"Zamfirescu constant c must lie in (0, 1/2), got {c}")


def _check_delta(delta: float) -> None:
    if not 0.0 <= delta < 1.0:
        raise fp_exception.InvalidConstants(f"delta must lie in [0, 1), got {delta}")


def _conclude(condition_class: fp_enum.ConditionClass,
              constants: dict[str, float],
              samples: SampleSet,
              lhs: npt.NDArray[np.float64],
              alternatives: list[npt.NDArray[np.float64]],
              slack: float,
              gauge: GaugeFunction | None = None,
              b2_holds: bool | None = None) -> CertificateOrViolation:
    """
    A pair passes if lhs <= rhs + slack for at least one alternative right-hand side
    """
    margins = np.stack([rhs - lhs for rhs in alternatives], axis=-1)
    best = np.max(margins, axis=-1)
    failing = np.flatnonzero(best < -slack)
    if len(failing) > 0:
        index = int(failing[0])
        residuals = [float(-margin) for margin in margins[index]]
        _logger.debug("%s violated at pair %d of %d", fp_enum.enum_to_str(condition_class), index, len(samples))
        return ConditionViolation(condition_class, constants, index, samples.xs[index], samples.ys[index],
                                  residuals, len(samples))
    max_slack = float(np.min(best)) if len(best) > 0 else float("inf")
    return ContractiveCertificate(condition_class, constants, len(samples), max_slack, gauge, b2_holds)


def delta_from_zamfirescu(a: float, b: float, c: float) -> float:
    """
    Quasi-contractive constant implied by Zamfirescu constants:
    max{a, b/(1-b), c/(1-c)}, always inside [0, 1) on the admissible box.
    """
    _check_zamfirescu_constants(a, b, c)
    return max(a, b / (1.0 - b), c / (1.0 - c))


def check_zamfirescu(mapping: MappingSpec,
                     norm: Norm,
                     constants: tuple[float, float, float],
                     samples: SampleSet,
                     slack: float = fp_base.CONDITION_SLACK) -> CertificateOrViolation:
    """
    For every pair at least one of
    (z1) ||Tx-Ty|| <= a||x-y||,
    (z2) ||Tx-Ty|| <= b(||x-Tx|| + ||y-Ty||),
    (z3) ||Tx-Ty|| <= c(||x-Ty|| + ||y-Tx||).
    Violations report lhs - rhs for z1, z2, z3 in that order.
    """
    a, b, c = (float(value) for value in constants)
    _check_zamfirescu_constants(a, b, c)
    terms = _PairTerms(mapping, norm, samples)
    alternatives = [a * terms.distance,
                    b * (terms.x_residual + terms.y_residual),
                    c * (terms.x_to_ty + terms.y_to_tx)]
    return _conclude(fp_enum.ConditionClass.ZAMFIRESCU, {"a": a, "b": b, "c": c},
                     samples, terms.images, alternatives, slack)


def check_quasi_contractive(mapping: MappingSpec,
                            norm: Norm,
                            delta: float,
                            samples: SampleSet,
                            slack: float = fp_base.CONDITION_SLACK) -> CertificateOrViolation:
    """
    (b1) ||Tx-Ty|| <= delta||x-y|| + 2 delta||x-Tx|| on every ordered pair.
    (b2), with ||x-Ty|| in place of ||x-Tx||, is reported as the b2_holds flag only.
    """
    delta = float(delta)
    _check_delta(delta)
    terms = _PairTerms(mapping, norm, samples)
    b1 = delta * terms.distance + 2.0 * delta * terms.x_residual
    b2 = delta * terms.distance + 2.0 * delta * terms.x_to_ty
    b2_holds = bool(np.all(terms.images <= b2 + slack))
    return _conclude(fp_enum.ConditionClass.QUASI_CONTRACTIVE, {"delta": delta},
                     samples, terms.images, [b1], slack, b2_holds=b2_holds)


def check_osilike_udomene(mapping: MappingSpec,
                          norm: Norm,
                          delta: float,
                          lipschitz: float,
                          samples: SampleSet,
                          slack: float = fp_base.CONDITION_SLACK) -> CertificateOrViolation:
    """
    ||Tx-Ty|| <= delta||x-y|| + L||x-Tx|| on every ordered pair
    """
    delta = float(delta)
    lipschitz = float(lipschitz)
    _check_delta(delta)
    if not lipschitz >= 0.0:
        raise fp_exception.InvalidConstants(f"L must be non-negative, got {lipschitz}")
    terms = _PairTerms(mapping, norm, samples)
    rhs = delta * terms.distance + lipschitz * terms.x_residual
    return _conclude(fp_enum.ConditionClass.OSILIKE_UDOMENE, {"delta": delta, "L": lipschitz},
                     samples, terms.images, [rhs], slack)


def check_contractive_like(mapping: MappingSpec,
                           norm: Norm,
                           delta: float,
                           gauge: GaugeFunction,
                           samples: SampleSet,
                           slack: float = fp_base.CONDITION_SLACK) -> CertificateOrViolation:
    """
    ||Tx-Ty|| <= delta||x-y|| + phi(||x-Tx||) on every ordered pair
    """
    delta = float(delta)
    _check_delta(delta)
    terms = _PairTerms(mapping, norm, samples)
    rhs = delta * terms.distance + gauge(terms.x_residual)
    return _conclude(fp_enum.ConditionClass.CONTRACTIVE_LIKE, {"delta": delta},
                     samples, terms.images, [rhs], slack, gauge=gauge)


def verify_unique_fixed_point(mapping: MappingSpec,
                              certificate: ContractiveCertificate,
                              candidate_points: npt.ArrayLike,
                              tolerance: float = fp_base.DEFAULT_TOLERANCE,
                              norm: Norm | None = None) -> UniquenessVerdict:
    """
    Among the candidates at most one point may satisfy ||Tp - p|| <= tolerance
    (up to DISTINCT_POINT_DISTANCE). Returns the passing candidate with the
    smallest residual, or None. Two distinct passing points under a valid
    contractive-like certificate are flagged as a contradiction.
    """
    if certificate.condition_class != fp_enum.ConditionClass.CONTRACTIVE_LIKE:
        raise ValueError("Uniqueness check requires a contractive-like certificate")
    if norm is None:
        norm = Norm.euclidean()
    candidates = np.atleast_2d(np.asarray(candidate_points, dtype=np.float64))
    if candidates.shape[1] != mapping.dimension:
        candidates = candidates.reshape(-1, mapping.dimension)
    residuals = np.atleast_1d(norm(candidates - mapping.evaluate(candidates)))
    passing = np.flatnonzero(residuals <= tolerance)
    if len(passing) == 0:
        return UniquenessVerdict(None, 0, False)
    best = int(passing[np.argmin(residuals[passing])])
    spread = max(norm(candidates[index] - candidates[best]) for index in passing)
    contradiction = bool(certificate.is_valid and spread > fp_base.DISTINCT_POINT_DISTANCE)
    if contradiction:
        _logger.warning("%s: %d distinct candidates pass as fixed points under a contractive-like certificate",
                        mapping.label, len(passing))
    return UniquenessVerdict(candidates[best].copy(), len(passing), contradiction, float(residuals[best]))
