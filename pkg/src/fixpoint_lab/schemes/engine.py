"""
One-step maps of the iteration schemes

Every step function has the signature (mapping, x_n, alpha_n, betas_n) and
returns a StepResult. intermediates[i - 1] holds y^i, so y^1 comes first.
The named reductions are written out directly; their arithmetic follows the
generic engines operation by operation, so both give identical floats.
"""
from typing import Callable
import numpy as np
import numpy.typing as npt
import fixpoint_lab.enumeration as fp_enum
import fixpoint_lab.exception as fp_exception
from fixpoint_lab.conditions.element import MappingSpec, as_point

Point = npt.NDArray[np.float64]


class StepResult:
    """
    Next iterate plus the auxiliary points computed on the way
    """

    def __init__(self, next_point: Point, intermediates: list[Point] | None = None) -> None:
        self.next_point = next_point
        self.intermediates = intermediates if intermediates is not None else []


def _check_parameters(alpha: float, betas: list[float]) -> None:
    for value in [alpha] + list(betas):
        if not 0.0 <= value <= 1.0:
            raise fp_exception.InvalidSchedule(f"Scheme parameters must lie in [0, 1], got {value}")


def _check_beta_count(betas: list[float], count: int, name: str) -> None:
    if len(betas) != count:
        raise ValueError(f"{name} step expects {count} beta values, got {len(betas)}")


def step_multistep_1_5(mapping: MappingSpec, x_n: Point, alpha_n: float, betas_n: list[float]) -> StepResult:
    """
    y^{k-1} = (1-b^{k-1})x + b^{k-1}Tx
    y^i     = (1-b^i)x + b^i T y^{i+1},  i = k-2..1
    x'      = (1-a)x + a T y^1
    """
    if len(betas_n) < 1:
        raise ValueError("Multistep step expects at least one beta value")
    _check_parameters(alpha_n, betas_n)
    x = as_point(x_n, mapping.dimension)
    k = len(betas_n) + 1
    levels: list[Point] = [x] * k
    beta = betas_n[k - 2]
    levels[k - 1] = (1.0 - beta) * x + beta * mapping.evaluate(x)
    for i in range(k - 2, 0, -1):
        beta = betas_n[i - 1]
        levels[i] = (1.0 - beta) * x + beta * mapping.evaluate(levels[i + 1])
    next_point = (1.0 - alpha_n) * x + alpha_n * mapping.evaluate(levels[1])
    return StepResult(next_point, levels[1:])


def step_new_multistep_1_6(mapping: MappingSpec, x_n: Point, alpha_n: float, betas_n: list[float]) -> StepResult:
    """
    y^{k-1} = (1-b^{k-1})x + b^{k-1}Tx
    y^i     = (1-b^i)y^{i+1} + b^i T y^{i+1},  i = k-2..1
    x'      = (1-a)y^1 + a T y^1
    """
    if len(betas_n) < 1:
        raise ValueError("Multistep step expects at least one beta value")
    _check_parameters(alpha_n, betas_n)
    x = as_point(x_n, mapping.dimension)
    k = len(betas_n) + 1
    levels: list[Point] = [x] * k
    beta = betas_n[k - 2]
    levels[k - 1] = (1.0 - beta) * x + beta * mapping.evaluate(x)
    for i in range(k - 2, 0, -1):
        beta = betas_n[i - 1]
        levels[i] = (1.0 - beta) * levels[i + 1] + beta * mapping.evaluate(levels[i + 1])
    next_point = (1.0 - alpha_n) * levels[1] + alpha_n * mapping.evaluate(levels[1])
    return StepResult(next_point, levels[1:])


def step_s_iteration(mapping: MappingSpec, x_n: Point, alpha_n: float, betas_n: list[float]) -> StepResult:
    """
    y  = (1-b)x + bTx
    x' = (1-a)Tx + aTy
    """
    _check_beta_count(betas_n, 1, "S-iteration")
    _check_parameters(alpha_n, betas_n)
    x = as_point(x_n, mapping.dimension)
    beta = betas_n[0]
    image = mapping.evaluate(x)
    y = (1.0 - beta) * x + beta * image
    next_point = (1.0 - alpha_n) * image + alpha_n * mapping.evaluate(y)
    return StepResult(next_point, [y])


def step_picard(mapping: MappingSpec, x_n: Point, alpha_n: float = 1.0, betas_n: list[float] | None = None) -> StepResult:
    """
    x' = Tx, written as (1-1)x + 1*Tx
    """
    _check_beta_count(betas_n or [], 0, "Picard")
    x = as_point(x_n, mapping.dimension)
    return StepResult((1.0 - 1.0) * x + 1.0 * mapping.evaluate(x))


def step_mann(mapping: MappingSpec, x_n: Point, alpha_n: float, betas_n: list[float] | None = None) -> StepResult:
    """
    x' = (1-a)x + aTx (Krasnoselskij for constant a)
    """
    _check_beta_count(betas_n or [], 0, "Mann")
    _check_parameters(alpha_n, [])
    x = as_point(x_n, mapping.dimension)
    return StepResult((1.0 - alpha_n) * x + alpha_n * mapping.evaluate(x))


def step_ishikawa(mapping: MappingSpec, x_n: Point, alpha_n: float, betas_n: list[float]) -> StepResult:
    """
    y  = (1-b)x + bTx
    x' = (1-a)x + aTy
    """
    _check_beta_count(betas_n, 1, "Ishikawa")
    _check_parameters(alpha_n, betas_n)
    x = as_point(x_n, mapping.dimension)
    beta = betas_n[0]
    y = (1.0 - beta) * x + beta * mapping.evaluate(x)
    return StepResult((1.0 - alpha_n) * x + alpha_n * mapping.evaluate(y), [y])


def step_noor(mapping: MappingSpec, x_n: Point, alpha_n: float, betas_n: list[float]) -> StepResult:
    """
    z  = (1-g)x + gTx
    y  = (1-b)x + bTz
    x' = (1-a)x + aTy
    with b = betas_n[0] and g = betas_n[1]
    """
    _check_beta_count(betas_n, 2, "Noor")
    _check_parameters(alpha_n, betas_n)
    x = as_point(x_n, mapping.dimension)
    beta, gamma = betas_n
    z = (1.0 - gamma) * x + gamma * mapping.evaluate(x)
    y = (1.0 - beta) * x + beta * mapping.evaluate(z)
    return StepResult((1.0 - alpha_n) * x + alpha_n * mapping.evaluate(y), [y, z])


def step_new_two_step(mapping: MappingSpec, x_n: Point, alpha_n: float, betas_n: list[float]) -> StepResult:
    """
    y  = (1-b)x + bTx
    x' = (1-a)y + aTy
    """
    _check_beta_count(betas_n, 1, "New two-step")
    _check_parameters(alpha_n, betas_n)
    x = as_point(x_n, mapping.dimension)
    beta = betas_n[0]
    y = (1.0 - beta) * x + beta * mapping.evaluate(x)
    return StepResult((1.0 - alpha_n) * y + alpha_n * mapping.evaluate(y), [y])


def step_sp(mapping: MappingSpec, x_n: Point, alpha_n: float, betas_n: list[float]) -> StepResult:
    """
    z  = (1-g)x + gTx
    y  = (1-b)z + bTz
    x' = (1-a)y + aTy
    with b = betas_n[0] and g = betas_n[1]
    """
    _check_beta_count(betas_n, 2, "SP")
    _check_parameters(alpha_n, betas_n)
    x = as_point(x_n, mapping.dimension)
    beta, gamma = betas_n
    z = (1.0 - gamma) * x + gamma * mapping.evaluate(x)
    y = (1.0 - beta) * z + beta * mapping.evaluate(z)
    return StepResult((1.0 - alpha_n) * y + alpha_n * mapping.evaluate(y), [y, z])


StepFunction = Callable[[MappingSpec, Point, float, list[float]], StepResult]

step_switcher: dict[fp_enum.SchemeFamily, StepFunction] = {
    fp_enum.SchemeFamily.MULTISTEP_1_5: step_multistep_1_5,
    fp_enum.SchemeFamily.NEW_MULTISTEP_1_6: step_new_multistep_1_6,
    fp_enum.SchemeFamily.S_ITERATION_1_7: step_s_iteration,
    fp_enum.SchemeFamily.PICARD: step_picard,
    fp_enum.SchemeFamily.KRASNOSELSKIJ: step_mann,
    fp_enum.SchemeFamily.MANN: step_mann,
    fp_enum.SchemeFamily.ISHIKAWA: step_ishikawa,
    fp_enum.SchemeFamily.NEW_TWO_STEP: step_new_two_step,
    fp_enum.SchemeFamily.NOOR: step_noor,
    fp_enum.SchemeFamily.SP: step_sp,
}


def step(mapping: MappingSpec,
         family: fp_enum.SchemeFamily,
         x_n: Point,
         alpha_n: float,
         betas_n: list[float]) -> StepResult:
    """
    Dispatches to the step function of the given family
    """
    step_function = step_switcher.get(family, None)
    if step_function is None:
        raise fp_exception.UnknownFamily(str(family))
    return step_function(mapping, x_n, alpha_n, betas_n)
