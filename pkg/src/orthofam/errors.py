"""Exception hierarchy shared by every module of the kernel."""


class GeometryError(Exception):
    """Base class for precondition failures of geometric operations."""


class IncompatibleFields(GeometryError, ValueError):
    """Two quadratic-extension scalars live in different fields."""


class CoincidentLines(GeometryError):
    pass


class InfinitePoint(GeometryError):
    pass


class SingularFamily(GeometryError):
    pass


class SingularPair(GeometryError):
    pass


class ParallelVelocities(GeometryError):
    """Both points move along parallel lines; every joining line passes through ``point``."""

    def __init__(self, point, message="velocities are parallel; lines A_tB_t are concurrent"):
        super().__init__(message)
        self.point = point


class EqualParameters(GeometryError):
    pass


class ZeroCoordinates(GeometryError):
    pass


class EqualClasses(GeometryError):
    pass


class NotOrthologic(GeometryError):
    pass


class DegenerateTarget(GeometryError):
    pass


class DegenerateInput(GeometryError):
    pass


class NoSuchPoint(GeometryError):
    pass


class NotDefined(GeometryError):
    pass


class NonConcurrent(GeometryError):
    pass


class DegenerateAtInfinity(GeometryError):
    pass


class DegenerateConfiguration(GeometryError):
    pass


class NoSolution(GeometryError):
    pass


class NotUnique(GeometryError):
    pass


class NotHyperbola(GeometryError):
    pass


class NotParabola(GeometryError):
    pass


class DegenerateDual(GeometryError):
    pass


class NotABasis(GeometryError):
    pass


class WrongDimension(GeometryError):
    pass


class NotOnCircumcircle(GeometryError):
    pass
