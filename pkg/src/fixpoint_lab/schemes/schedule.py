"""
Parameter schedules (alpha_n, beta_n^i, lambda)
"""
from typing import Any
import numpy as np
import numpy.typing as npt
import fixpoint_lab.enumeration as fp_enum
import fixpoint_lab.exception as fp_exception


class ParameterSchedule:
    """
    Real sequence in [0, 1].

    constant: value for every n
    harmonic: 1/(n + c) with c >= 1
    explicit: given list, the final value repeats forever

    A positive floor is an asserted lower bound; emitting a value below it
    raises ScheduleFloorViolated. The value 1 is admitted since Picard is
    Krasnoselskij with lambda = 1.
    """

    def __init__(self,
                 kind: fp_enum.ScheduleKind,
                 value: float | None = None,
                 c: float | None = None,
                 values: list[float] | None = None,
                 floor: float = 0.0) -> None:
        self.kind = kind
        self.value = None
        self.c = None
        self.values: list[float] = []
        self.floor = float(floor)
        if not 0.0 <= self.floor <= 1.0:
            raise fp_exception.InvalidSchedule(f"Schedule floor must lie in [0, 1], got {floor}")
        if kind == fp_enum.ScheduleKind.CONSTANT:
            if value is None:
                raise fp_exception.InvalidSchedule("Constant schedule requires a value")
            self.value = self._check_value(float(value))
        elif kind == fp_enum.ScheduleKind.HARMONIC:
            if c is None or not float(c) >= 1.0:
                raise fp_exception.InvalidSchedule(f"Harmonic schedule requires c >= 1, got {c}")
            self.c = float(c)
        elif kind == fp_enum.ScheduleKind.EXPLICIT:
            if not values:
                raise fp_exception.InvalidSchedule("Explicit schedule requires at least one value")
            self.values = [self._check_value(float(item)) for item in values]
        else:
            raise fp_exception.InvalidSchedule(f"Unknown schedule kind: {kind}")

    @classmethod
    def constant(cls, value: float, floor: float = 0.0) -> "ParameterSchedule":
        """Same value for every n"""
        return cls(fp_enum.ScheduleKind.CONSTANT, value=value, floor=floor)

    @classmethod
    def harmonic(cls, c: float = 1.0) -> "ParameterSchedule":
        """1/(n+c)"""
        return cls(fp_enum.ScheduleKind.HARMONIC, c=c)

    @classmethod
    def explicit(cls, values: list[float], floor: float = 0.0) -> "ParameterSchedule":
        """Given prefix, extended by its final value"""
        return cls(fp_enum.ScheduleKind.EXPLICIT, values=values, floor=floor)

    @classmethod
    def parse(cls, text: str, floor: float = 0.0) -> "ParameterSchedule":
        """
        Parses command-line notation:
        "0.5", "constant:0.5", "harmonic:1" or "list:0.9,0.5"
        """
        head, sep, tail = text.strip().partition(":")
        try:
            if not sep:
                return cls.constant(float(head), floor)
            kind = fp_enum.str_to_enum("ScheduleKind", head.lower())
            if kind == fp_enum.ScheduleKind.CONSTANT:
                return cls.constant(float(tail), floor)
            if kind == fp_enum.ScheduleKind.HARMONIC:
                return cls(kind, c=float(tail), floor=floor)
            return cls.explicit([float(item) for item in tail.split(",") if item.strip()], floor)
        except ValueError as ex:
            if isinstance(ex, (fp_exception.InvalidSchedule, fp_exception.ScheduleFloorViolated)):
                raise
            raise fp_exception.InvalidSchedule(f"Invalid schedule: '{text}'") from ex

    def _check_value(self, value: float) -> float:
        if not 0.0 <= value <= 1.0:
            raise fp_exception.InvalidSchedule(f"Schedule values must lie in [0, 1], got {value}")
        if value < self.floor:
            raise fp_exception.ScheduleFloorViolated(f"Schedule value {value} is below floor {self.floor}")
        return value

    def __call__(self, n: int) -> float:
        return self.at(n)

    def at(self, n: int) -> float:
        """
        Value emitted at step n (n >= 0)
        """
        if n < 0:
            raise IndexError(f"Negative step index: {n}")
        if self.kind == fp_enum.ScheduleKind.CONSTANT:
            return self.value
        if self.kind == fp_enum.ScheduleKind.HARMONIC:
            result = 1.0 / (n + self.c)
            if result < self.floor:
                raise fp_exception.ScheduleFloorViolated(
                    f"Harmonic schedule emits {result} at n={n}, below floor {self.floor}")
            return result
        return self.values[min(n, len(self.values) - 1)]

    def prefix(self, count: int) -> npt.NDArray[np.float64]:
        """
        First count values as array
        """
        return np.array([self.at(n) for n in range(count)], dtype=np.float64)

    @property
    def is_zero(self) -> bool:
        """True if every emitted value is exactly zero"""
        if self.kind == fp_enum.ScheduleKind.CONSTANT:
            return self.value == 0.0
        if self.kind == fp_enum.ScheduleKind.EXPLICIT:
            return all(item == 0.0 for item in self.values)
        return False

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, ParameterSchedule):
            return self.to_dict() == other.to_dict()
        return False

    def __repr__(self) -> str:
        return f"ParameterSchedule({self.to_dict()})"

    def to_dict(self) -> dict:
        """JSON representation {kind, value|c|list, floor}"""
        data: dict[str, Any] = {"kind": fp_enum.enum_to_str(self.kind)}
        if self.kind == fp_enum.ScheduleKind.CONSTANT:
            data["value"] = self.value
        elif self.kind == fp_enum.ScheduleKind.HARMONIC:
            data["c"] = self.c
        else:
            data["list"] = list(self.values)
        data["floor"] = self.floor
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "ParameterSchedule":
        """Inverse of to_dict"""
        try:
            kind = fp_enum.str_to_enum("ScheduleKind", str(data["kind"]))
        except (KeyError, ValueError) as ex:
            raise fp_exception.InvalidSchedule(f"Invalid schedule kind in {data}") from ex
        floor = float(data.get("floor", 0.0))
        if kind == fp_enum.ScheduleKind.CONSTANT:
            return cls(kind, value=data.get("value"), floor=floor)
        if kind == fp_enum.ScheduleKind.HARMONIC:
            return cls(kind, c=data.get("c"), floor=floor)
        return cls(kind, values=data.get("list"), floor=floor)
