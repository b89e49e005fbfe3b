"""
Trajectories of configured schemes
"""
import logging
from typing import Iterator
import numpy as np
import numpy.typing as npt
import fixpoint_lab.base as fp_base
import fixpoint_lab.enumeration as fp_enum
import fixpoint_lab.exception as fp_exception
from fixpoint_lab.conditions.element import MappingSpec, Norm, as_point
from fixpoint_lab.schemes.config import SchemeConfig
from fixpoint_lab.schemes.engine import StepResult, step

_logger = logging.getLogger(__name__)

Point = npt.NDArray[np.float64]


class StoppingRule:
    """
    Stop when ||x_n - Tx_n|| <= tol, when n reaches max_iters or when
    ||x_n|| exceeds divergence_bound
    """

    def __init__(self,
                 tol: float = fp_base.DEFAULT_TOLERANCE,
                 max_iters: int = fp_base.DEFAULT_MAX_ITERS,
                 divergence_bound: float = fp_base.DIVERGENCE_BOUND) -> None:
        if not tol >= 0.0:
            raise ValueError(f"tol must be non-negative, got {tol}")
        if max_iters < 0:
            raise ValueError(f"max_iters must be non-negative, got {max_iters}")
        if not divergence_bound > 0.0:
            raise ValueError(f"divergence_bound must be positive, got {divergence_bound}")
        self.tol = float(tol)
        self.max_iters = int(max_iters)
        self.divergence_bound = float(divergence_bound)

    def to_dict(self) -> dict:
        """Report representation"""
        return {"tol": self.tol, "max_iters": self.max_iters, "divergence_bound": self.divergence_bound}


class IterationState:
    """
    Iterate x_n with its image and residual.

    alpha, betas and step describe the step x_n -> x_{n+1}; they are filled
    in by iterate() when the generator is resumed.
    """

    def __init__(self, n: int, point: Point, image: Point, residual: float) -> None:
        self.n = n
        self.point = point
        self.image = image
        self.residual = residual
        self.alpha: float | None = None
        self.betas: list[float] | None = None
        self.step: StepResult | None = None


def iterate(mapping: MappingSpec,
            config: SchemeConfig,
            x0: npt.ArrayLike,
            norm: Norm | None = None) -> Iterator[IterationState]:
    """
    Endless sequence of iteration states starting at x0.

    The consumer decides when to stop. Every new iterate is checked for
    finiteness (NonFiniteValue) and domain membership (DomainEscape).
    """
    if norm is None:
        norm = Norm.euclidean()
    point = as_point(x0, mapping.dimension)
    if not mapping.domain.contains(point):
        raise fp_exception.DomainEscape(f"{mapping.label}: initial point outside domain: {point.tolist()}")
    n = 0
    while True:
        image = mapping.evaluate(point)
        state = IterationState(n, point, image, norm(point - image))
        yield state
        state.alpha = config.alpha_at(n)
        state.betas = config.betas_at(n)
        state.step = step(mapping, config.family, point, state.alpha, state.betas)
        point = state.step.next_point
        n += 1
        if not np.all(np.isfinite(point)):
            raise fp_exception.NonFiniteValue(f"{mapping.label}: non-finite iterate at n={n}")
        if not mapping.domain.contains(point):
            raise fp_exception.DomainEscape(f"{mapping.label}: iterate {n} outside domain: {point.tolist()}")


class Trajectory:
    """
    Iterates x_0..x_N with residuals ||x_n - Tx_n|| and distances ||x_n - p||.

    fp_distances is NaN-filled when the fixed point is unknown. alphas and
    betas hold the parameters of the N performed steps. Intermediates are
    kept for every step only when requested, otherwise for the last step.
    """

    def __init__(self,
                 scheme: SchemeConfig,
                 iterates: npt.ArrayLike,
                 residuals: npt.ArrayLike,
                 fp_distances: npt.ArrayLike,
                 stop_reason: fp_enum.StopReason,
                 alphas: npt.ArrayLike | None = None,
                 betas: npt.ArrayLike | None = None,
                 intermediates: list[list[Point]] | None = None,
                 last_intermediates: list[Point] | None = None,
                 label: str = "") -> None:
        self.scheme = scheme
        self.iterates = np.atleast_2d(np.asarray(iterates, dtype=np.float64))
        self.residuals = np.asarray(residuals, dtype=np.float64)
        self.fp_distances = np.asarray(fp_distances, dtype=np.float64)
        if not len(self.iterates) == len(self.residuals) == len(self.fp_distances):
            raise ValueError("Trajectory lists must have equal length")
        self.stop_reason = stop_reason
        steps = len(self.iterates) - 1
        self.alphas = np.asarray(alphas if alphas is not None else [], dtype=np.float64)
        width = len(scheme.betas)
        if betas is None:
            self.betas = np.zeros((steps, width))
        else:
            self.betas = np.asarray(betas, dtype=np.float64).reshape(steps, width)
        self.intermediates = intermediates
        self.last_intermediates = last_intermediates if last_intermediates is not None else []
        self.label = label

    def __len__(self) -> int:
        return len(self.iterates)

    @property
    def iterations(self) -> int:
        """Number N of performed steps"""
        return len(self.iterates) - 1

    @property
    def final_point(self) -> Point:
        """x_N"""
        return self.iterates[-1]

    @property
    def final_residual(self) -> float:
        """||x_N - Tx_N||"""
        return float(self.residuals[-1])

    @property
    def converged(self) -> bool:
        """Stopped on the residual tolerance"""
        return self.stop_reason == fp_enum.StopReason.TOLERANCE


class TrajectoryBuilder:
    """
    Accumulates iteration states into a Trajectory
    """

    def __init__(self,
                 mapping: MappingSpec,
                 config: SchemeConfig,
                 norm: Norm,
                 record_intermediates: bool = False,
                 label: str = "") -> None:
        self.mapping = mapping
        self.config = config
        self.norm = norm
        self.record_intermediates = record_intermediates
        self.label = label if label else config.name
        self.points: list[Point] = []
        self.residuals: list[float] = []
        self.fp_distances: list[float] = []
        self.alphas: list[float] = []
        self.betas: list[list[float]] = []
        self.intermediates: list[list[Point]] = []
        self.last_intermediates: list[Point] = []

    def add(self, state: IterationState, previous: IterationState | None) -> None:
        """
        Appends x_n and the parameters of the step that produced it
        """
        if previous is not None:
            self.alphas.append(previous.alpha)
            self.betas.append(previous.betas)
            self.last_intermediates = previous.step.intermediates
            if self.record_intermediates:
                self.intermediates.append(previous.step.intermediates)
        self.points.append(state.point)
        self.residuals.append(state.residual)
        if self.mapping.known_fixed_point is not None:
            self.fp_distances.append(self.norm(state.point - self.mapping.known_fixed_point))
        else:
            self.fp_distances.append(float("nan"))

    def finish(self, stop_reason: fp_enum.StopReason) -> Trajectory:
        """
        Returns the completed trajectory
        """
        trajectory = Trajectory(self.config, self.points, self.residuals, self.fp_distances, stop_reason,
                                self.alphas, self.betas,
                                self.intermediates if self.record_intermediates else None,
                                self.last_intermediates, self.label)
        _logger.debug("%s on %s: %d steps, residual %.3e, stop %s", self.label, self.mapping.label,
                      trajectory.iterations, trajectory.final_residual, fp_enum.enum_to_str(stop_reason))
        return trajectory


def stop_reason_of(state: IterationState, stopping: StoppingRule, norm: Norm) -> fp_enum.StopReason | None:
    """
    Stop reason at the current state, or None to keep going
    """
    if state.residual <= stopping.tol:
        return fp_enum.StopReason.TOLERANCE
    if norm(state.point) > stopping.divergence_bound:
        return fp_enum.StopReason.DIVERGENCE_GUARD
    if state.n >= stopping.max_iters:
        return fp_enum.StopReason.MAX_ITERS
    return None


def run(mapping: MappingSpec,
        config: SchemeConfig,
        x0: npt.ArrayLike,
        stopping: StoppingRule | None = None,
        norm: Norm | None = None,
        record_intermediates: bool = False,
        label: str = "") -> Trajectory:
    """
    Iterates the configured scheme from x0.

    The residual is tested before each step, so a trajectory that stops on
    tolerance after N steps holds N + 1 iterates and its last residual is
    the first one at or below tol. Starting at a fixed point stops at n = 0.
    """
    if stopping is None:
        stopping = StoppingRule()
    if norm is None:
        norm = Norm.euclidean()
    builder = TrajectoryBuilder(mapping, config, norm, record_intermediates, label)
    previous = None
    for state in iterate(mapping, config, x0, norm):
        builder.add(state, previous)
        reason = stop_reason_of(state, stopping, norm)
        if reason is not None:
            return builder.finish(reason)
        previous = state
    raise RuntimeError("iterate() ended unexpectedly")
