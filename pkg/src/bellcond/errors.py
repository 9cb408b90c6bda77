"""Exception hierarchy shared by all modules."""


class BellcondError(ValueError):
    """Base class for every domain error raised by this package."""


class NegativeWeight(BellcondError):
    pass


class NotNormalized(BellcondError):
    """Weights do not sum to one, or a state vector is not unit length."""


class DimensionMismatch(BellcondError):
    pass


class ZeroConditioningEvent(BellcondError):
    """The conditioning event has probability zero, so the Bayes quotient is undefined."""


class NonFiniteAngle(BellcondError):
    pass


class ZeroAmplitudeOutcome(BellcondError):
    pass


class OutOfRange(BellcondError):
    pass


class OutOfRangeTarget(BellcondError):
    pass


class BadRange(BellcondError):
    pass


class NonPositiveTolerance(BellcondError):
    pass


class EmptyConditionRow(BellcondError):
    pass
