"""Exception hierarchy shared by every module of the package."""


class KummerError(ValueError):
    """Base class for domain errors (bad curve data, unsupported places)."""


class InvalidModulusError(KummerError):
    pass


class NoUniqueSolutionError(KummerError):
    pass


class InvalidPrimeError(KummerError):
    pass


class ValidationError(KummerError):
    """A curve specification violates one of its invariants."""


class DegreeError(ValidationError):
    pass


class CharacteristicError(ValidationError):
    pass


class MultiplicityRangeError(ValidationError):
    pass


class DuplicateLabelError(ValidationError):
    pass


class PowerError(ValidationError):
    """f(x) is a d-th power for some d > 1 dividing m."""


class EmptyCurveError(ValidationError):
    pass


class CurveSyntaxError(KummerError):
    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)


class PlaceIndexError(KummerError, IndexError):
    pass


class UnsupportedPlaceError(KummerError):
    pass


class UnsupportedError(KummerError):
    """Inputs outside the hypotheses under which a closed form or criterion holds."""
