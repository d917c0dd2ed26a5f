class RoundSleekError(Exception):
    """Base class for toolkit errors."""


class DomainMismatch(RoundSleekError, ValueError):
    """A point does not belong to the space it was used with."""


class EmptyRegion(RoundSleekError, ValueError):
    pass


class MissingDiameter(RoundSleekError, ValueError):
    pass


class UnknownTransform(RoundSleekError, KeyError):
    pass


class UnknownName(RoundSleekError, KeyError):
    pass


class InvalidParameter(RoundSleekError, ValueError):
    pass


class NotLinear(RoundSleekError, ValueError):
    pass


class InvalidQuery(RoundSleekError, ValueError):
    """A topology query whose hypotheses could not be established."""


class UnsupportedDimension(RoundSleekError, ValueError):
    pass


class SpaceDefinitionError(RoundSleekError, ValueError):
    """Malformed space-definition JSON; ``path`` names the offending node."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
