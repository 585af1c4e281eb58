"""Exception hierarchy shared by all modules."""


class ParaRedError(Exception):
    """Base class for every error raised by this package."""


class NotFiniteType(ParaRedError):
    pass


class InvalidPreset(ParaRedError):
    pass


class NotARoot(ParaRedError):
    pass


class IndexOutOfRange(ParaRedError):
    pass


class DimensionMismatch(ParaRedError):
    pass


class NotNested(ParaRedError):
    pass


class MixedParabolics(ParaRedError):
    pass


class Unbounded(ParaRedError):
    pass


class NotComparable(ParaRedError):
    pass


class HypothesisFailed(ParaRedError):
    pass


class ClassMismatch(ParaRedError):
    pass


class NoDominatingMinimalType(ParaRedError):
    pass


class CapViolated(ParaRedError):
    pass


class NonIntegralExpansion(ParaRedError):
    pass


class NonIntegralExponent(ParaRedError):
    pass


class WindowOverflow(ParaRedError):
    pass


class WindowTooSmall(ParaRedError):
    pass


class FieldUnsupported(ParaRedError):
    pass


class ConfigError(ParaRedError):
    """Invalid or missing user configuration (CLI exit code 2)."""
