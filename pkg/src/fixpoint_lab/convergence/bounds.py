"""
Residual bounds ||x - Tx|| <= (1 + delta)||x - p|| along trajectories
"""
import numpy as np
import numpy.typing as npt
import fixpoint_lab.base as fp_base
import fixpoint_lab.exception as fp_exception
from fixpoint_lab.conditions.element import MappingSpec, Norm, as_point
from fixpoint_lab.schemes.runner import Trajectory


class BoundReport:
    """
    Per-entry lhs <= rhs + slack verdicts
    """

    def __init__(self, name: str, lhs: npt.ArrayLike, rhs: npt.ArrayLike, slack: float) -> None:
        self.name = name
        self.lhs = np.asarray(lhs, dtype=np.float64)
        self.rhs = np.asarray(rhs, dtype=np.float64)
        self.tolerance = slack
        self.margins = self.rhs - self.lhs
        failing = np.flatnonzero(self.margins < -slack)
        self.first_violation: int | None = int(failing[0]) if len(failing) > 0 else None

    @property
    def holds(self) -> bool:
        """No violation"""
        return self.first_violation is None

    def to_dict(self) -> dict:
        """Report representation"""
        return {"name": self.name,
                "holds": self.holds,
                "first_violation": self.first_violation,
                "lhs": self.lhs.tolist(),
                "rhs": self.rhs.tolist()}


def _require_fixed_point(fixed_point: npt.ArrayLike | None) -> np.ndarray:
    if fixed_point is None:
        raise fp_exception.MissingFixedPoint("Residual bounds require a known fixed point")
    return as_point(fixed_point)


def residual_decay_bound(trajectory: Trajectory,
                         delta: float,
                         fixed_point: npt.ArrayLike | None,
                         norm: Norm | None = None,
                         slack: float = fp_base.AUDIT_SLACK) -> BoundReport:
    """
    ||x_n - Tx_n|| <= (1 + delta)||x_n - p|| for every iterate.

    The residuals recorded in the trajectory form the left-hand side, so norm
    must be the norm the trajectory was run with.
    """
    point = _require_fixed_point(fixed_point)
    if norm is None:
        norm = Norm.euclidean()
    distances = np.atleast_1d(norm(trajectory.iterates - point))
    return BoundReport("residual_decay", trajectory.residuals, (1.0 + delta) * distances, slack)


def y_residual_bound(intermediates: list[npt.ArrayLike],
                     delta: float,
                     fixed_point: npt.ArrayLike | None,
                     x_n: npt.ArrayLike,
                     mapping: MappingSpec,
                     norm: Norm | None = None,
                     betas: list[float] | None = None,
                     slack: float = fp_base.AUDIT_SLACK) -> BoundReport:
    """
    ||y^i - Ty^i|| <= (1 + delta)||x_n - p|| for every intermediate y^i of one step
    (entry i - 1 belongs to y^i).

    With the betas of a new-multistep step the bound is sharpened by the
    telescoped factor prod_{j=i}^{k-1} [1 - beta^j (1 - delta)], each factor <= 1.
    """
    point = _require_fixed_point(fixed_point)
    if norm is None:
        norm = Norm.euclidean()
    base = (1.0 + delta) * norm(as_point(x_n) - point)
    levels = [as_point(y) for y in intermediates]
    if betas is not None and len(betas) != len(levels):
        raise ValueError(f"Expected {len(levels)} beta values, got {len(betas)}")
    lhs = [norm(y - mapping.evaluate(y)) for y in levels]
    rhs = []
    for i in range(1, len(levels) + 1):
        factor = 1.0
        if betas is not None:
            for j in range(i, len(levels) + 1):
                factor *= 1.0 - betas[j - 1] * (1.0 - delta)
        rhs.append(factor * base)
    return BoundReport("y_residual", lhs, rhs, slack)
