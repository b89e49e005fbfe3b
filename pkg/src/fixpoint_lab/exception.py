"""
Collection of user-defined exceptions
"""


class DomainEscape(ValueError):
    """
    A point or an image of the mapping left the domain box
    """


class InvalidConstants(ValueError):
    """
    Contractive constants outside their admissible ranges
    """


class InvalidGauge(ValueError):
    """
    Gauge function is not strictly increasing, continuous or zero at zero
    """


class InvalidSchedule(ValueError):
    """
    Parameter schedule emits values outside [0, 1] or is malformed
    """


class UnknownFamily(ValueError):
    """
    Scheme family name not recognized
    """


class NonFiniteValue(ArithmeticError):
    """
    An iterate has a NaN or infinite coordinate
    """


class MissingFixedPoint(ValueError):
    """
    Operation requires a known fixed point
    """


class MalformedWitness(ValueError):
    """
    Recurrence witness has negative entries or mu outside (0, 1)
    """


class ScheduleFloorViolated(ValueError):
    """
    A schedule emitted a value below its declared floor
    """


class SchemeMismatch(ValueError):
    """
    Coupled run does not pair the schemes an audit applies to
    """


class CorpusError(RuntimeError):
    """
    Raised by the corpus reader
    """


class ConfigError(ValueError):
    """
    Invalid experiment configuration
    """
