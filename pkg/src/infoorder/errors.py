"""Exception hierarchy shared by every module."""


class OrderError(ValueError):
    """Base class for all validation and contract errors raised by this package."""


class EmptyDistribution(OrderError):
    pass


class NegativeEntry(OrderError):
    pass


class BadSum(OrderError):
    pass


class BadIndex(OrderError):
    pass


class BadParameter(OrderError):
    pass


class BadDimension(OrderError):
    pass


class DimensionMismatch(OrderError):
    pass


class InvalidPermutation(OrderError):
    pass


class InvalidParams(OrderError):
    pass


class NotMonotone(OrderError):
    pass


class UnsupportedSpec(OrderError):
    pass


class AntisymmetryViolation(OrderError):
    """Both ``x <= y`` and ``y <= x`` hold for distinct points.

    Never a valid state of a partial order; signals an implementation or
    tolerance bug.
    """


class NotHermitian(OrderError):
    pass


class NotPSD(OrderError):
    pass


class BadTrace(OrderError):
    pass


class NotCommuting(OrderError):
    pass
