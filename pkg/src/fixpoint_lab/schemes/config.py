"""
Scheme configurations and the reduction table of the named schemes
"""
from typing import Any
import fixpoint_lab.enumeration as fp_enum
import fixpoint_lab.exception as fp_exception
from fixpoint_lab.schemes.schedule import ParameterSchedule

GENERIC_FAMILIES = frozenset([fp_enum.SchemeFamily.MULTISTEP_1_5,
                              fp_enum.SchemeFamily.NEW_MULTISTEP_1_6,
                              fp_enum.SchemeFamily.S_ITERATION_1_7])

# Named reduction -> (generic family, k)
REDUCTION_TABLE: dict[fp_enum.SchemeFamily, tuple[fp_enum.SchemeFamily, int]] = {
    fp_enum.SchemeFamily.PICARD: (fp_enum.SchemeFamily.MULTISTEP_1_5, 2),
    fp_enum.SchemeFamily.KRASNOSELSKIJ: (fp_enum.SchemeFamily.MULTISTEP_1_5, 2),
    fp_enum.SchemeFamily.MANN: (fp_enum.SchemeFamily.MULTISTEP_1_5, 2),
    fp_enum.SchemeFamily.ISHIKAWA: (fp_enum.SchemeFamily.MULTISTEP_1_5, 2),
    fp_enum.SchemeFamily.NOOR: (fp_enum.SchemeFamily.MULTISTEP_1_5, 3),
    fp_enum.SchemeFamily.NEW_TWO_STEP: (fp_enum.SchemeFamily.NEW_MULTISTEP_1_6, 2),
    fp_enum.SchemeFamily.SP: (fp_enum.SchemeFamily.NEW_MULTISTEP_1_6, 3),
}

# Number of user-supplied beta schedules of the named reductions
_NAMED_BETA_COUNT = {
    fp_enum.SchemeFamily.PICARD: 0,
    fp_enum.SchemeFamily.KRASNOSELSKIJ: 0,
    fp_enum.SchemeFamily.MANN: 0,
    fp_enum.SchemeFamily.ISHIKAWA: 1,
    fp_enum.SchemeFamily.NEW_TWO_STEP: 1,
    fp_enum.SchemeFamily.NOOR: 2,
    fp_enum.SchemeFamily.SP: 2,
}


class SchemeConfig:
    """
    Iteration scheme with its parameter schedules.

    betas[i - 1] is the schedule of beta^i, so a k-step multistep scheme
    carries k - 1 beta schedules. The S-iteration carries exactly one.
    """

    def __init__(self,
                 family: fp_enum.SchemeFamily,
                 alpha: ParameterSchedule | None = None,
                 betas: list[ParameterSchedule] | None = None,
                 k: int | None = None) -> None:
        self.family = family
        self.betas: list[ParameterSchedule] = list(betas) if betas is not None else []
        if family == fp_enum.SchemeFamily.PICARD:
            alpha = alpha if alpha is not None else ParameterSchedule.constant(1.0)
            if alpha.kind != fp_enum.ScheduleKind.CONSTANT or alpha.value != 1.0:
                raise fp_exception.InvalidSchedule("Picard iteration requires alpha == 1")
        if alpha is None:
            raise fp_exception.InvalidSchedule(f"{fp_enum.enum_to_str(family)} requires an alpha schedule")
        self.alpha = alpha
        if family in (fp_enum.SchemeFamily.MULTISTEP_1_5, fp_enum.SchemeFamily.NEW_MULTISTEP_1_6):
            if k is None:
                k = len(self.betas) + 1
            if k < 2:
                raise ValueError(f"Multistep schemes require k >= 2, got {k}")
            if len(self.betas) != k - 1:
                raise fp_exception.InvalidSchedule(f"k={k} requires {k - 1} beta schedules, got {len(self.betas)}")
            self.k = int(k)
        elif family == fp_enum.SchemeFamily.S_ITERATION_1_7:
            if len(self.betas) != 1:
                raise fp_exception.InvalidSchedule("S-iteration requires exactly one beta schedule")
            self.k = 2
        elif family in REDUCTION_TABLE:
            expected = _NAMED_BETA_COUNT[family]
            if len(self.betas) != expected:
                raise fp_exception.InvalidSchedule(
                    f"{fp_enum.enum_to_str(family)} requires {expected} beta schedules, got {len(self.betas)}")
            if family == fp_enum.SchemeFamily.KRASNOSELSKIJ and alpha.kind != fp_enum.ScheduleKind.CONSTANT:
                raise fp_exception.InvalidSchedule("Krasnoselskij iteration requires a constant lambda")
            self.k = REDUCTION_TABLE[family][1]
        else:
            raise fp_exception.UnknownFamily(str(family))

    @property
    def name(self) -> str:
        """Family name as used in files and on the command line"""
        return fp_enum.enum_to_str(self.family)

    @property
    def is_reduction(self) -> bool:
        """True for the named special cases of the generic schemes"""
        return self.family in REDUCTION_TABLE

    def alpha_at(self, n: int) -> float:
        """alpha_n"""
        return self.alpha.at(n)

    def betas_at(self, n: int) -> list[float]:
        """[beta_n^1, ..., beta_n^{k-1}]"""
        return [schedule.at(n) for schedule in self.betas]

    def expand(self) -> "SchemeConfig":
        """
        Equivalent configuration of one of the three generic families
        """
        if not self.is_reduction:
            return self
        generic, k = REDUCTION_TABLE[self.family]
        betas = self.betas
        if self.family in (fp_enum.SchemeFamily.PICARD,
                           fp_enum.SchemeFamily.KRASNOSELSKIJ,
                           fp_enum.SchemeFamily.MANN):
            betas = [ParameterSchedule.constant(0.0)]
        return SchemeConfig(generic, self.alpha, betas, k)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, SchemeConfig):
            return self.to_dict() == other.to_dict()
        return False

    def __repr__(self) -> str:
        return f"SchemeConfig({self.to_dict()})"

    def to_dict(self) -> dict:
        """JSON representation {family, k?, alpha, betas}"""
        data: dict[str, Any] = {"family": self.name}
        if self.family in (fp_enum.SchemeFamily.MULTISTEP_1_5, fp_enum.SchemeFamily.NEW_MULTISTEP_1_6):
            data["k"] = self.k
        data["alpha"] = self.alpha.to_dict()
        data["betas"] = [schedule.to_dict() for schedule in self.betas]
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "SchemeConfig":
        """Inverse of to_dict"""
        family = fp_enum.str_to_scheme_family(str(data["family"]))
        alpha = ParameterSchedule.from_dict(data["alpha"]) if "alpha" in data else None
        betas = [ParameterSchedule.from_dict(item) for item in data.get("betas", [])]
        return cls(family, alpha, betas, data.get("k"))


def expand_reduction(family: fp_enum.SchemeFamily | str,
                     alpha: ParameterSchedule | None = None,
                     betas: list[ParameterSchedule] | None = None,
                     lam: float | None = None) -> SchemeConfig:
    """
    Expands a named reduction to its generic configuration.

    Noor and Ishikawa are multistep_1_5 with k = 3 and k = 2, SP and the new
    two-step scheme are new_multistep_1_6 with k = 3 and k = 2. Mann is
    multistep_1_5 with k = 2 and beta^1 == 0, Krasnoselskij is Mann with
    alpha == lam and Picard is Krasnoselskij with lam = 1.
    """
    if isinstance(family, str):
        family = fp_enum.str_to_scheme_family(family)
    if family not in REDUCTION_TABLE:
        raise fp_exception.UnknownFamily(f"Not a named reduction: '{fp_enum.enum_to_str(family)}'")
    if family == fp_enum.SchemeFamily.KRASNOSELSKIJ and lam is not None:
        alpha = ParameterSchedule.constant(lam)
    return SchemeConfig(family, alpha, betas).expand()
