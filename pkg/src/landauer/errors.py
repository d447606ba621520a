"""Exception types. All derive from ``ValueError`` so callers can catch broadly."""


class LandauerError(ValueError):
    pass


class InvalidGrid(LandauerError):
    pass


class GridTooSmall(LandauerError):
    """State does not fit the grid (tail mass or support margin violated)."""


class NotNormalized(LandauerError):
    pass


class NonPositiveSigma(LandauerError):
    pass


class NonPositiveLength(LandauerError):
    pass


class NonPositiveH(LandauerError):
    pass


class InvalidSmoothing(LandauerError):
    pass


class VanishingOverlap(LandauerError):
    pass


class GenerationFailed(LandauerError):
    pass


class InvalidVolumes(LandauerError):
    pass


class NonPositiveTemperature(LandauerError):
    pass


class InvalidSigmas(LandauerError):
    pass


class InvalidScenario(LandauerError):
    pass


class MismatchBeyondTolerance(LandauerError):
    """Numerical cross-check disagrees with the closed form."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NonPositiveInput(LandauerError):
    pass
