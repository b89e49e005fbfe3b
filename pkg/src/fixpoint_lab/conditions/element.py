"""
Domain elements for contractive-condition checks

A mapping is always a self-map on an axis-aligned box E of R^d.
"""
import logging
import math
from typing import Any, Callable
import numpy as np
import numpy.typing as npt
from scipy.interpolate import PchipInterpolator
import fixpoint_lab.base as fp_base
import fixpoint_lab.enumeration as fp_enum
import fixpoint_lab.exception as fp_exception

_logger = logging.getLogger(__name__)

Point = npt.NDArray[np.float64]


def as_point(value: Any, dimension: int | None = None) -> Point:
    """
    Converts scalar or sequence to a 1-D float array.
    """
    point = np.atleast_1d(np.asarray(value, dtype=np.float64))
    if point.ndim != 1:
        raise ValueError(f"Expected a point, got array of shape {point.shape}")
    if dimension is not None and point.shape[0] != dimension:
        raise ValueError(f"Expected point of dimension {dimension}, got {point.shape[0]}")
    return point


class Box:
    """
    Axis-aligned box [lo, hi] (the closed convex set E)
    """

    def __init__(self, lo: Any, hi: Any) -> None:
        self.lo = as_point(lo)
        self.hi = as_point(hi, len(self.lo))
        if not (np.all(np.isfinite(self.lo)) and np.all(np.isfinite(self.hi))):
            raise ValueError("Box bounds must be finite")
        if np.any(self.lo > self.hi):
            raise ValueError("Box requires lo <= hi on every axis")

    @property
    def dimension(self) -> int:
        """Number of coordinates"""
        return len(self.lo)

    def contains(self, points: npt.ArrayLike, slack: float = fp_base.DOMAIN_SLACK) -> bool:
        """
        True if every given point (shape (d,) or (m, d)) lies in the box
        """
        arr = np.asarray(points, dtype=np.float64)
        return bool(np.all(arr >= self.lo - slack) and np.all(arr <= self.hi + slack))

    def grid(self, points_per_axis: int) -> npt.NDArray[np.float64]:
        """
        Regular grid with points_per_axis points along every axis, shape (m, d)
        """
        axes = [np.linspace(lo, hi, points_per_axis) for lo, hi in zip(self.lo, self.hi)]
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=-1)

    def uniform(self, rng: np.random.Generator, count: int) -> npt.NDArray[np.float64]:
        """
        count points drawn uniformly from the box, shape (count, d)
        """
        return rng.uniform(self.lo, self.hi, size=(count, self.dimension))

    def to_dict(self) -> dict:
        """Corpus representation"""
        return {"lo": self.lo.tolist(), "hi": self.hi.tolist()}


class Norm:
    """
    Either a p-norm (1 <= p <= inf) or a weighted 2-norm with positive weights
    """

    def __init__(self,
                 kind: fp_enum.NormKind = fp_enum.NormKind.P_NORM,
                 p: float = 2.0,
                 weights: npt.ArrayLike | None = None) -> None:
        self.kind = kind
        self.p = float(p)
        self.weights = None
        if kind == fp_enum.NormKind.P_NORM:
            if not (self.p >= 1.0):
                raise ValueError(f"p-norm requires p >= 1, got {p}")
        elif kind == fp_enum.NormKind.WEIGHTED_2:
            if weights is None:
                raise ValueError("Weighted 2-norm requires weights")
            self.weights = np.asarray(weights, dtype=np.float64)
            if np.any(self.weights <= 0.0) or not np.all(np.isfinite(self.weights)):
                raise ValueError("Weights must be positive and finite")
        else:
            raise fp_exception.InvalidConstants(f"Unknown norm kind: {kind}")

    @classmethod
    def euclidean(cls) -> "Norm":
        """Plain 2-norm"""
        return cls(fp_enum.NormKind.P_NORM, 2.0)

    @classmethod
    def maximum(cls) -> "Norm":
        """inf-norm"""
        return cls(fp_enum.NormKind.P_NORM, math.inf)

    def __call__(self, vectors: npt.ArrayLike) -> Any:
        """
        Norm of a vector of shape (d,) or row-wise norms of shape (m, d)
        """
        arr = np.asarray(vectors, dtype=np.float64)
        if self.kind == fp_enum.NormKind.WEIGHTED_2:
            return np.sqrt(np.sum(self.weights * arr * arr, axis=-1))
        if arr.ndim == 1:
            return float(np.linalg.norm(arr, ord=self.p))
        return np.linalg.norm(arr, ord=self.p, axis=-1)

    def check_axioms(self, points: npt.ArrayLike, rel_tol: float = 1e-12) -> bool:
        """
        Checks norm(0) = 0, absolute homogeneity and the triangle inequality
        on consecutive triples of the given points (shape (m, d), m >= 3).
        """
        arr = np.asarray(points, dtype=np.float64)
        if self(np.zeros(arr.shape[1])) != 0.0:
            return False
        for scale in (-3.5, 0.25, 2.0):
            lhs = self(scale * arr)
            rhs = abs(scale) * self(arr)
            if np.any(np.abs(lhs - rhs) > rel_tol * np.maximum(rhs, 1.0)):
                return False
        x, y, z = arr[:-2], arr[1:-1], arr[2:]
        lhs = self(x - z)
        rhs = self(x - y) + self(y - z)
        return bool(np.all(lhs <= rhs + rel_tol * np.maximum(rhs, 1.0)))

    def to_dict(self) -> dict:
        """Config representation"""
        if self.kind == fp_enum.NormKind.WEIGHTED_2:
            return {"kind": "weighted_2", "weights": self.weights.tolist()}
        return {"kind": "p_norm", "p": "inf" if math.isinf(self.p) else self.p}

    @classmethod
    def from_dict(cls, data: dict) -> "Norm":
        """Inverse of to_dict"""
        kind = fp_enum.str_to_enum("NormKind", data.get("kind", "p_norm"))
        if kind == fp_enum.NormKind.WEIGHTED_2:
            return cls(kind, weights=data["weights"])
        return cls(kind, float(data.get("p", 2.0)))


class GaugeFunction:
    """
    Strictly increasing continuous function phi on [0, inf) with phi(0) = 0.

    linear:    t -> L*t                 (L > 0)
    power:     t -> c*t**q              (c > 0, q >= 1)
    tabulated: monotone cubic (PCHIP) through knots starting at (0, 0),
               extended linearly past the last knot with the last chord slope
    """

    def __init__(self, kind: fp_enum.GaugeKind, **parameters: Any) -> None:
        self.kind = kind
        self.parameters: dict[str, Any] = {}
        self._interpolator = None
        if kind == fp_enum.GaugeKind.LINEAR:
            slope = float(parameters["L"])
            if not slope > 0.0:
                raise fp_exception.InvalidGauge(f"Linear gauge requires L > 0, got {slope}")
            self.parameters["L"] = slope
        elif kind == fp_enum.GaugeKind.POWER:
            coefficient = float(parameters["c"])
            exponent = float(parameters["q"])
            if not coefficient > 0.0 or not exponent >= 1.0:
                raise fp_exception.InvalidGauge(f"Power gauge requires c > 0 and q >= 1, got c={coefficient}, q={exponent}")
            self.parameters.update(c=coefficient, q=exponent)
        elif kind == fp_enum.GaugeKind.TABULATED:
            knots = np.asarray(parameters["knots"], dtype=np.float64)
            values = np.asarray(parameters["values"], dtype=np.float64)
            if knots.shape != values.shape or len(knots) < 2:
                raise fp_exception.InvalidGauge("Tabulated gauge requires at least two (knot, value) pairs")
            if knots[0] != 0.0 or values[0] != 0.0:
                raise fp_exception.InvalidGauge("Tabulated gauge must start at (0, 0)")
            if np.any(np.diff(knots) <= 0.0) or np.any(np.diff(values) <= 0.0):
                raise fp_exception.InvalidGauge("Tabulated gauge knots and values must be strictly increasing")
            self.parameters.update(knots=knots.tolist(), values=values.tolist())
            self._interpolator = PchipInterpolator(knots, values, extrapolate=False)
            self._tail_slope = (values[-1] - values[-2]) / (knots[-1] - knots[-2])
        else:
            raise fp_exception.InvalidGauge(f"Unknown gauge kind: {kind}")

    @classmethod
    def linear(cls, slope: float) -> "GaugeFunction":
        """phi(t) = L*t"""
        return cls(fp_enum.GaugeKind.LINEAR, L=slope)

    @classmethod
    def power(cls, coefficient: float, exponent: float) -> "GaugeFunction":
        """phi(t) = c*t**q"""
        return cls(fp_enum.GaugeKind.POWER, c=coefficient, q=exponent)

    @classmethod
    def tabulated(cls, knots: npt.ArrayLike, values: npt.ArrayLike) -> "GaugeFunction":
        """Monotone interpolation through knots"""
        return cls(fp_enum.GaugeKind.TABULATED, knots=knots, values=values)

    def __call__(self, t: Any) -> Any:
        arr = np.asarray(t, dtype=np.float64)
        if self.kind == fp_enum.GaugeKind.LINEAR:
            result = self.parameters["L"] * arr
        elif self.kind == fp_enum.GaugeKind.POWER:
            result = self.parameters["c"] * np.power(arr, self.parameters["q"])
        else:
            last_knot = self.parameters["knots"][-1]
            last_value = self.parameters["values"][-1]
            inside = np.minimum(arr, last_knot)
            result = np.where(arr <= last_knot,
                              self._interpolator(inside),
                              last_value + self._tail_slope * (arr - last_knot))
        if result.ndim == 0:
            return float(result)
        return result

    def validate(self, grid: npt.ArrayLike, modulus_ratio: float = 0.75) -> bool:
        """
        Checks phi(0) = 0, strict increase on the sorted grid and continuity:
        halving the grid spacing must shrink the largest jump by modulus_ratio.
        """
        points = np.unique(np.asarray(grid, dtype=np.float64))
        if self(0.0) != 0.0:
            return False
        values = self(points)
        if np.any(np.diff(values) <= 0.0):
            return False
        refined = np.sort(np.concatenate([points, 0.5 * (points[:-1] + points[1:])]))
        coarse_jump = float(np.max(np.diff(values)))
        fine_jump = float(np.max(np.diff(self(refined))))
        return fine_jump <= modulus_ratio * coarse_jump + 1e-15

    def to_dict(self) -> dict:
        """Corpus representation"""
        data = {"kind": fp_enum.enum_to_str(self.kind)}
        data.update(self.parameters)
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "GaugeFunction":
        """Inverse of to_dict"""
        kind = fp_enum.str_to_enum("GaugeKind", data["kind"])
        parameters = {key: value for key, value in data.items() if key != "kind"}
        return cls(kind, **parameters)


class MappingSpec:
    """
    Self-map T on a box E with an optional exact fixed point.

    evaluate accepts a single point of shape (d,) or a batch of shape (m, d).
    Both the argument and the image are checked against the box.
    """

    def __init__(self,
                 label: str,
                 domain: Box,
                 function: Callable[[npt.NDArray[np.float64]], npt.NDArray[np.float64]],
                 known_fixed_point: npt.ArrayLike | None = None,
                 kind: fp_enum.MapKind | None = None,
                 parameters: dict | None = None,
                 certificate: dict | None = None) -> None:
        self.label = label
        self.domain = domain
        self._function = function
        self.kind = kind
        self.parameters = parameters if parameters is not None else {}
        self.certificate = certificate if certificate is not None else {}
        self.known_fixed_point = None
        if known_fixed_point is not None:
            point = as_point(known_fixed_point, domain.dimension)
            residual = float(np.max(np.abs(self.evaluate(point) - point)))
            if residual > fp_base.FIXED_POINT_TOLERANCE:
                raise ValueError(f"{label}: declared fixed point has residual {residual:.3e}")
            self.known_fixed_point = point

    @property
    def dimension(self) -> int:
        """Dimension d of the ambient space"""
        return self.domain.dimension

    def evaluate(self, points: npt.ArrayLike) -> npt.NDArray[np.float64]:
        """
        Returns T(x) for one point or for every row of a batch
        """
        arr = np.asarray(points, dtype=np.float64)
        if arr.shape[-1] != self.dimension:
            raise ValueError(f"{self.label}: expected dimension {self.dimension}, got {arr.shape[-1]}")
        if not self.domain.contains(arr):
            raise fp_exception.DomainEscape(f"{self.label}: argument outside domain: {arr.tolist()}")
        image = np.asarray(self._function(arr), dtype=np.float64)
        if image.shape != arr.shape:
            raise ValueError(f"{self.label}: image shape {image.shape} differs from argument shape {arr.shape}")
        if not np.all(np.isfinite(image)):
            raise fp_exception.NonFiniteValue(f"{self.label}: non-finite image of {arr.tolist()}")
        if not self.domain.contains(image):
            raise fp_exception.DomainEscape(f"{self.label}: image outside domain: {image.tolist()}")
        return image

    def __call__(self, points: npt.ArrayLike) -> npt.NDArray[np.float64]:
        return self.evaluate(points)

    @classmethod
    def affine(cls,
               label: str,
               matrix: npt.ArrayLike,
               offset: npt.ArrayLike,
               domain: Box,
               known_fixed_point: npt.ArrayLike | None = None,
               certificate: dict | None = None) -> "MappingSpec":
        """
        x -> A x + b
        """
        mat = np.atleast_2d(np.asarray(matrix, dtype=np.float64))
        vec = as_point(offset, mat.shape[0])
        if mat.shape != (domain.dimension, domain.dimension):
            raise ValueError(f"{label}: matrix shape {mat.shape} does not match dimension {domain.dimension}")

        def function(arr: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
            return arr @ mat.T + vec

        parameters = {"matrix": mat.tolist(), "offset": vec.tolist()}
        return cls(label, domain, function, known_fixed_point, fp_enum.MapKind.AFFINE, parameters, certificate)

    @classmethod
    def scalar_formula(cls,
                       label: str,
                       domain: Box,
                       function: str = "identity",
                       scale: float = 1.0,
                       shift: float = 0.0,
                       inner_scale: float = 1.0,
                       inner_shift: float = 0.0,
                       known_fixed_point: npt.ArrayLike | None = None,
                       certificate: dict | None = None) -> "MappingSpec":
        """
        Elementwise x -> scale*f(inner_scale*x + inner_shift) + shift
        """
        try:
            base_function = SCALAR_FUNCTIONS[function]
        except KeyError as ex:
            raise ValueError(f"{label}: unknown scalar function '{function}'") from ex

        def evaluate(arr: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
            return scale * base_function(inner_scale * arr + inner_shift) + shift

        parameters = {"function": function, "scale": scale, "shift": shift,
                      "inner_scale": inner_scale, "inner_shift": inner_shift}
        return cls(label, domain, evaluate, known_fixed_point, fp_enum.MapKind.SCALAR_FORMULA, parameters,
                   certificate)

    @classmethod
    def piecewise(cls,
                  label: str,
                  domain: Box,
                  knots: npt.ArrayLike,
                  values: npt.ArrayLike,
                  known_fixed_point: npt.ArrayLike | None = None,
                  certificate: dict | None = None) -> "MappingSpec":
        """
        Elementwise continuous piecewise-linear map through (knots, values)
        """
        xs = np.asarray(knots, dtype=np.float64)
        ys = np.asarray(values, dtype=np.float64)
        if xs.shape != ys.shape or len(xs) < 2 or np.any(np.diff(xs) <= 0.0):
            raise ValueError(f"{label}: piecewise map requires increasing knots with matching values")

        def evaluate(arr: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
            return np.interp(arr, xs, ys)

        parameters = {"knots": xs.tolist(), "values": ys.tolist()}
        return cls(label, domain, evaluate, known_fixed_point, fp_enum.MapKind.PIECEWISE, parameters, certificate)


SCALAR_FUNCTIONS: dict[str, Callable[[npt.NDArray[np.float64]], npt.NDArray[np.float64]]] = {
    "identity": lambda arr: arr,
    "sin": np.sin,
    "cos": np.cos,
    "tanh": np.tanh,
    "arctan": np.arctan,
}


class ContractiveCertificate:
    """
    No violation of a contractive condition found on sample_count ordered pairs.

    max_slack is the tightest margin observed, i.e. the minimum over all pairs
    of (right-hand side - left-hand side); for Zamfirescu the best of the three
    alternatives is taken per pair.
    """

    def __init__(self,
                 condition_class: fp_enum.ConditionClass,
                 constants: dict[str, float],
                 sample_count: int,
                 max_slack: float,
                 gauge: GaugeFunction | None = None,
                 b2_holds: bool | None = None) -> None:
        self.condition_class = condition_class
        self.constants = constants
        self.sample_count = sample_count
        self.max_slack = max_slack
        self.gauge = gauge
        self.b2_holds = b2_holds

    @property
    def delta(self) -> float | None:
        """Contraction constant where the class has one"""
        return self.constants.get("delta")

    @property
    def is_valid(self) -> bool:
        """Certificates hold with non-negative margin up to the slack"""
        return self.max_slack >= -fp_base.CONDITION_SLACK

    def to_dict(self) -> dict:
        """Report representation"""
        data = {"status": "certificate",
                "condition_class": fp_enum.enum_to_str(self.condition_class),
                "constants": dict(self.constants),
                "sample_count": self.sample_count,
                "max_slack": self.max_slack}
        if self.gauge is not None:
            data["gauge"] = self.gauge.to_dict()
        if self.b2_holds is not None:
            data["b2_holds"] = self.b2_holds
        return data


class ConditionViolation:
    """
    First sample pair (in sample order) violating a contractive condition.

    residuals holds lhs - rhs per alternative; all of them are positive.
    """

    def __init__(self,
                 condition_class: fp_enum.ConditionClass,
                 constants: dict[str, float],
                 pair_index: int,
                 x: npt.ArrayLike,
                 y: npt.ArrayLike,
                 residuals: list[float],
                 sample_count: int) -> None:
        self.condition_class = condition_class
        self.constants = constants
        self.pair_index = pair_index
        self.x = as_point(x)
        self.y = as_point(y)
        self.residuals = residuals
        self.sample_count = sample_count

    @property
    def is_valid(self) -> bool:
        """A violation never certifies anything"""
        return False

    def to_dict(self) -> dict:
        """Report representation"""
        return {"status": "violation",
                "condition_class": fp_enum.enum_to_str(self.condition_class),
                "constants": dict(self.constants),
                "pair_index": self.pair_index,
                "x": self.x.tolist(),
                "y": self.y.tolist(),
                "residuals": list(self.residuals),
                "sample_count": self.sample_count}


CertificateOrViolation = ContractiveCertificate | ConditionViolation


class UniquenessVerdict:
    """
    Result of searching candidate points for fixed points
    """

    def __init__(self,
                 fixed_point: Point | None,
                 passing_count: int,
                 contradiction: bool,
                 residual: float | None = None) -> None:
        self.fixed_point = fixed_point
        self.passing_count = passing_count
        self.contradiction = contradiction
        self.residual = residual
