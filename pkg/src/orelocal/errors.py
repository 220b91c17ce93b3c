"""Exception hierarchy.  The CLI maps every ``OreLocalError`` to exit status 2."""


class OreLocalError(Exception):
    pass


class ParseError(OreLocalError, ValueError):
    pass


class DimensionError(OreLocalError, ValueError):
    pass


class RingMismatchError(OreLocalError, ValueError):
    pass


class ResourceError(OreLocalError, RuntimeError):
    """A configurable guard (pair count, saturation steps) was exceeded."""


class NotAGAlgebraError(OreLocalError, ValueError):
    pass


class NoPreimageOrderingError(OreLocalError):
    """No admissible elimination ordering was found within the weight bound."""


class NonCentralError(OreLocalError, ValueError):
    pass


class NotMultipleError(OreLocalError, ValueError):
    pass


class DecompositionMismatchError(OreLocalError, ValueError):
    pass


class UnsupportedCombinationError(OreLocalError, NotImplementedError):
    pass


class OracleContractError(OreLocalError):
    pass


class TrivialLocalizationError(OreLocalError, ValueError):
    """The multiplicative set contains zero, so the localization is the zero ring."""
