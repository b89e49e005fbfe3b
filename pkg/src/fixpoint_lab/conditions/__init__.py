"""
Contractive conditions

Mappings on boxes and the certification of the four condition classes
over finite sample sets.
"""
from fixpoint_lab.conditions.element import (Box, Norm, GaugeFunction, MappingSpec, ContractiveCertificate,
                                             ConditionViolation, UniquenessVerdict)
from fixpoint_lab.conditions.sampling import SampleSet
from fixpoint_lab.conditions.checker import (check_zamfirescu, delta_from_zamfirescu, check_quasi_contractive,
                                             check_osilike_udomene, check_contractive_like,
                                             verify_unique_fixed_point)

__all__ = ["Box", "Norm", "GaugeFunction", "MappingSpec", "ContractiveCertificate", "ConditionViolation",
           "UniquenessVerdict", "SampleSet", "check_zamfirescu", "delta_from_zamfirescu",
           "check_quasi_contractive", "check_osilike_udomene", "check_contractive_like",
           "verify_unique_fixed_point"]
