"""Exception hierarchy shared across the package."""


class SgresError(Exception):
    """Base class for every error raised by this package."""


class ZeroOrNegativeGenerator(SgresError):
    pass


class GcdNotOne(SgresError):
    pass


class NonMinimalGenerator(SgresError):
    """A generator lies in the semigroup spanned by the others."""

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


class NotInSemigroup(SgresError):
    pass


class DimensionMismatch(SgresError):
    pass


class DegreeMismatch(SgresError):
    pass


class NotSkewSymmetric(SgresError):
    pass


class NotHomogeneous(SgresError):
    pass


class NotInClass(SgresError):
    pass


class InvalidParameters(SgresError):
    pass


class UnsupportedEmbeddingDimension(SgresError):
    pass


class UnsupportedClass(SgresError):
    pass


class VerificationFailure(SgresError):
    pass


class ConsistencyFailure(SgresError):
    pass


class CrossValidationMismatch(SgresError):
    """The closed-form criterion and the Betti-degree differences disagree."""

    def __init__(self, message, criterion=None, differences=None):
        super().__init__(message)
        self.criterion = criterion
        self.differences = differences
