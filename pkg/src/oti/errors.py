"""Exception types shared across the package."""


class OTIError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(OTIError, ValueError):
    """Invalid or inconsistent configuration."""


class NonUniqueOptimumError(OTIError, ValueError):
    """An instance has a tied optimum where a unique one is required."""


class GenerationExhaustedError(OTIError, RuntimeError):
    """Rejection sampling hit its attempt cap without accepting an instance."""


class ProtocolViolationError(OTIError, RuntimeError):
    """The incentive protocol was driven in an illegal order."""


class EmptyActiveSetError(OTIError, RuntimeError):
    """Elimination emptied the active set; must be unreachable by construction."""


class AlphaOutOfRangeError(OTIError, ValueError):
    """UCB exploration constant below the range a bound check supports."""


class RewardOutOfRangeError(OTIError, ValueError):
    """Observed reward outside [0, 1]."""


class NoOfferOccurredError(OTIError, RuntimeError):
    """The designated agent never received an offer in any usable run."""
