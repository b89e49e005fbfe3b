"""
Enum Definitions
"""

from enum import Enum
import fixpoint_lab.exception as fp_exception


class ConditionClass(Enum):
    """
    Contractive condition classes
    """

    ZAMFIRESCU = 0
    QUASI_CONTRACTIVE = 1
    OSILIKE_UDOMENE = 2
    CONTRACTIVE_LIKE = 3


class CoupledOutcome(Enum):
    """
    Classification of a coupled run
    """

    BOTH_CONVERGED = 0     # Both stopped on tolerance at the same limit
    GAP_VANISHING = 1      # Gap tail below agreement tolerance, not both stopped
    COUNTEREXAMPLE = 2     # One converged while the gap stagnates
    UNDECIDED = 3          # Neither converged


class GaugeKind(Enum):
    """
    Closed family of gauge functions
    """

    LINEAR = 0
    POWER = 1
    TABULATED = 2


class InequalityId(Enum):
    """
    Audited per-step inequalities of the equivalence proofs
    """

    T1_FORWARD_2_9 = 0
    T1_BACKWARD_2_18 = 1
    T2_FORWARD_2_28 = 2
    T2_BACKWARD_2_34 = 3


class MapKind(Enum):
    """
    Mapping kinds stored in corpus files
    """

    AFFINE = 0
    SCALAR_FORMULA = 1
    PIECEWISE = 2


class NormKind(Enum):
    """
    Supported norms
    """

    P_NORM = 0
    WEIGHTED_2 = 1


class ScheduleKind(Enum):
    """
    Parameter schedule kinds
    """

    CONSTANT = 0
    HARMONIC = 1
    EXPLICIT = 2


class SchemeFamily(Enum):
    """
    Iteration scheme families.

    The first three are the generic engines, the rest are named reductions.
    """

    MULTISTEP_1_5 = 0
    NEW_MULTISTEP_1_6 = 1
    S_ITERATION_1_7 = 2
    PICARD = 3
    KRASNOSELSKIJ = 4
    MANN = 5
    ISHIKAWA = 6
    NEW_TWO_STEP = 7
    NOOR = 8
    SP = 9


class StopReason(Enum):
    """
    Why a trajectory stopped
    """

    TOLERANCE = 0
    MAX_ITERS = 1
    DIVERGENCE_GUARD = 2


# Mapping from text to enum

str_to_enum_map = {
    "ConditionClass": {
        "zamfirescu": ConditionClass.ZAMFIRESCU,
        "quasi_contractive": ConditionClass.QUASI_CONTRACTIVE,
        "osilike_udomene": ConditionClass.OSILIKE_UDOMENE,
        "contractive_like": ConditionClass.CONTRACTIVE_LIKE,
    },
    "CoupledOutcome": {
        "both_converged": CoupledOutcome.BOTH_CONVERGED,
        "gap_vanishing": CoupledOutcome.GAP_VANISHING,
        "counterexample": CoupledOutcome.COUNTEREXAMPLE,
        "undecided": CoupledOutcome.UNDECIDED,
    },
    "GaugeKind": {
        "linear": GaugeKind.LINEAR,
        "power": GaugeKind.POWER,
        "tabulated": GaugeKind.TABULATED,
    },
    "InequalityId": {
        "T1_forward_2_9": InequalityId.T1_FORWARD_2_9,
        "T1_backward_2_18": InequalityId.T1_BACKWARD_2_18,
        "T2_forward_2_28": InequalityId.T2_FORWARD_2_28,
        "T2_backward_2_34": InequalityId.T2_BACKWARD_2_34,
    },
    "MapKind": {
        "affine": MapKind.AFFINE,
        "scalar_formula": MapKind.SCALAR_FORMULA,
        "piecewise": MapKind.PIECEWISE,
    },
    "NormKind": {
        "p_norm": NormKind.P_NORM,
        "weighted_2": NormKind.WEIGHTED_2,
    },
    "ScheduleKind": {
        "constant": ScheduleKind.CONSTANT,
        "harmonic": ScheduleKind.HARMONIC,
        "explicit": ScheduleKind.EXPLICIT,
        "list": ScheduleKind.EXPLICIT,
    },
    "SchemeFamily": {
        "multistep_1_5": SchemeFamily.MULTISTEP_1_5,
        "multistep": SchemeFamily.MULTISTEP_1_5,
        "new_multistep_1_6": SchemeFamily.NEW_MULTISTEP_1_6,
        "new_multistep": SchemeFamily.NEW_MULTISTEP_1_6,
        "s_iteration_1_7": SchemeFamily.S_ITERATION_1_7,
        "s_iteration": SchemeFamily.S_ITERATION_1_7,
        "picard": SchemeFamily.PICARD,
        "krasnoselskij": SchemeFamily.KRASNOSELSKIJ,
        "mann": SchemeFamily.MANN,
        "ishikawa": SchemeFamily.ISHIKAWA,
        "new_two_step": SchemeFamily.NEW_TWO_STEP,
        "noor": SchemeFamily.NOOR,
        "sp": SchemeFamily.SP,
    },
    "StopReason": {
        "tolerance": StopReason.TOLERANCE,
        "max_iters": StopReason.MAX_ITERS,
        "divergence_guard": StopReason.DIVERGENCE_GUARD,
    },
}


def str_to_enum(enum_type_name: str, text: str) -> Enum:
    """
    Converts text (as used in corpus, config and report files) to enumeration
    """
    enum_mapping = str_to_enum_map[enum_type_name]
    try:
        return enum_mapping[text.strip()]
    except KeyError as ex:
        raise ValueError(f"Invalid {enum_type_name} value: '{text}'") from ex


# Mapping from enum back to text. Index equals enum value.

enum_to_str_map = {
    "ConditionClass": [
        "zamfirescu",         # 0
        "quasi_contractive",  # 1
        "osilike_udomene",    # 2
        "contractive_like",   # 3
    ],
    "CoupledOutcome": [
        "both_converged",  # 0
        "gap_vanishing",   # 1
        "counterexample",  # 2
        "undecided",       # 3
    ],
    "GaugeKind": [
        "linear",     # 0
        "power",      # 1
        "tabulated",  # 2
    ],
    "InequalityId": [
        "T1_forward_2_9",    # 0
        "T1_backward_2_18",  # 1
        "T2_forward_2_28",   # 2
        "T2_backward_2_34",  # 3
    ],
    "MapKind": [
        "affine",          # 0
        "scalar_formula",  # 1
        "piecewise",       # 2
    ],
    "NormKind": [
        "p_norm",      # 0
        "weighted_2",  # 1
    ],
    "ScheduleKind": [
        "constant",  # 0
        "harmonic",  # 1
        "explicit",  # 2
    ],
    "SchemeFamily": [
        "multistep_1_5",      # 0
        "new_multistep_1_6",  # 1
        "s_iteration_1_7",    # 2
        "picard",             # 3
        "krasnoselskij",      # 4
        "mann",               # 5
        "ishikawa",           # 6
        "new_two_step",       # 7
        "noor",               # 8
        "sp",                 # 9
    ],
    "StopReason": [
        "tolerance",         # 0
        "max_iters",         # 1
        "divergence_guard",  # 2
    ],
}


def enum_to_str(enum_item: Enum) -> str:
    """
    Converts enum value back to text
    """
    enum_type_name = enum_item.__class__.__name__
    return enum_to_str_map[enum_type_name][enum_item.value]


def str_to_scheme_family(name: str) -> SchemeFamily:
    """
    Convert string to SchemeFamily Enum
    """
    try:
        return str_to_enum("SchemeFamily", name.lower().replace("-", "_"))
    except ValueError as ex:
        raise fp_exception.UnknownFamily(f"Unknown scheme family: '{name}'") from ex
