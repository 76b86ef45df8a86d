"""Exception hierarchy shared by all schurmaps modules."""


class SchurMapsError(Exception):
    """Base class for all library errors."""


class NotSquare(SchurMapsError):
    pass


class ShapeMismatch(SchurMapsError):
    pass


class DimensionMismatch(SchurMapsError):
    pass


class NotHermitian(SchurMapsError):
    pass


class NotOrthonormal(SchurMapsError):
    pass


class TooManyColumns(SchurMapsError):
    pass


class NotState(SchurMapsError):
    """Matrix fails the density-matrix requirements (Hermitian, PSD, trace one)."""


class NotPSD(SchurMapsError):
    """Carries the most negative eigenvalue found."""

    def __init__(self, min_eigenvalue):
        super().__init__(f"matrix is not PSD: most negative eigenvalue {min_eigenvalue:.3e}")
        self.min_eigenvalue = min_eigenvalue


class BadDiagonal(SchurMapsError):
    """A correlation matrix diagonal entry differs from 1."""

    def __init__(self, index, value):
        super().__init__(f"diagonal entry {index} is {value}, expected 1")
        self.index = index
        self.value = value


class WrongDimension(SchurMapsError):
    pass


class BadDimension(SchurMapsError):
    pass


class NotDistribution(SchurMapsError):
    pass


class NoDecompositionFound(SchurMapsError):
    """Search exhausted its restarts. A legitimate outcome for d >= 4, not a fault.

    Carries the best residual seen and the number of restarts used.
    """

    def __init__(self, best_residual, restarts):
        super().__init__(
            f"no flat decomposition found after {restarts} restarts "
            f"(best residual {best_residual:.3e})"
        )
        self.best_residual = best_residual
        self.restarts = restarts


class VerificationFailure(SchurMapsError):
    pass


class RecoveryFailure(SchurMapsError):
    """Environment-assisted correction did not return the input state."""

    def __init__(self, residual):
        super().__init__(f"recovered state differs from input: residual {residual:.3e}")
        self.residual = residual


class SerializationError(SchurMapsError):
    pass
