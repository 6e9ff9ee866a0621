"""Exception hierarchy.

Every error raised on a violated precondition derives from ``LrsError``
(itself a ``ValueError``), so callers can catch the whole family at once.
"""


class LrsError(ValueError):
    pass


# finite fields
class NonPrimeP(LrsError):
    pass


class DegreeZero(LrsError):
    pass


class FieldTooLarge(LrsError):
    pass


class TowerMismatch(LrsError):
    pass


class ZeroInput(LrsError):
    pass


class NotADivisor(LrsError):
    pass


# skew polynomials
class RingMismatch(LrsError):
    pass


class ZeroEvaluator(LrsError):
    pass


class DegreeTooLarge(LrsError):
    pass


class TooManyBlocks(LrsError):
    pass


class BlockTooLong(LrsError):
    pass


# counting / metric
class RankTooLarge(LrsError):
    pass


class WeightTooLarge(LrsError):
    pass


class ShapeMismatch(LrsError):
    pass


# codes
class MessageDegreeTooLarge(LrsError):
    pass


class EnumerationTooLarge(LrsError):
    """An exhaustive enumeration would exceed the configured cap."""


class InvalidRadius(LrsError):
    pass


class InvalidCode(LrsError):
    pass


# bounds
class RadiusNotLessThanD(LrsError):
    pass


class WeightViolation(LrsError):
    pass


class NegativeDiscriminant(LrsError):
    pass


class ZetaTooLarge(LrsError):
    pass


class EpsilonTooSmall(LrsError):
    pass


class EpsilonTooLarge(LrsError):
    pass


class IndependenceFailure(LrsError):
    pass


class PreconditionViolation(LrsError):
    pass


class InvariantViolation(LrsError):
    pass
