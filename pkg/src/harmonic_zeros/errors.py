"""Exception hierarchy shared by the library and the CLI."""


class HarmonicZerosError(Exception):
    """Base class for every error raised by this package."""


class InvalidPolynomial(HarmonicZerosError, ValueError):
    pass


class DegreeZero(InvalidPolynomial):
    pass


class InvalidTrinomial(HarmonicZerosError, ValueError):
    pass


class CaseMismatch(HarmonicZerosError, ValueError):
    """Parameter lies outside the domain of the requested bound case."""


class LowerBoundUndefined(HarmonicZerosError, ValueError):
    """The inner-radius equation has no positive root."""


class NoConvergence(HarmonicZerosError, RuntimeError):
    pass


class SolverError(HarmonicZerosError, RuntimeError):
    """Failures of the harmonic zero finder and winding counter."""


class CapacityExceeded(SolverError):
    pass


class ZeroOnContour(SolverError):
    pass


class NonIntegerWinding(SolverError):
    pass


class SingularZeroPresent(SolverError):
    pass


class CountMismatch(SolverError):
    def __init__(self, winding: int, signed_count: int):
        super().__init__(f"winding number {winding} != signed zero count {signed_count}")
        self.winding = winding
        self.signed_count = signed_count
