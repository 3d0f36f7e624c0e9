"""Exception types raised by tropicaust.

Anything the user can trigger with bad input derives from ``InputError`` so
the CLI can map it to exit code 2.
"""


class InputError(ValueError):
    pass


class ZeroVector(InputError):
    pass


class OrientationError(InputError):
    pass


class NotRightAnglePair(InputError):
    pass


class RightAngleExcluded(InputError):
    pass


class NegativeTime(InputError):
    pass


class NonConvexInput(InputError):
    pass


class EmptyInput(InputError):
    pass


class DegenerateInput(InputError):
    pass


class NotLatticePolygon(InputError):
    pass


class Unbounded(InputError):
    pass


class AgeExceeded(InputError):
    pass


class PointOutsideDomain(InputError):
    pass


class NonCanonicalVertex(InputError):
    pass


class UnexpectedFinalStar(InputError):
    pass


class ClassNotClosed(InputError):
    pass


class MissingRay(InputError):
    pass


class WindowContainsCriticalTime(InputError):
    pass


class NotUnimodularFan(InputError):
    pass


class IncompleteFan(InputError):
    pass
