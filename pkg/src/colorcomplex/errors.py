"""Exception types shared across the package."""


class ColorComplexError(Exception):
    """Base class for all package errors."""


class ParameterError(ColorComplexError, ValueError):
    """A caller-supplied parameter is out of the documented domain."""


class StructureError(ColorComplexError, ValueError):
    """An input object violates a structural invariant (bad edge, bad block, bad file)."""


class DefinitionError(ColorComplexError, ValueError):
    """The requested quantity is undefined for the given input (e.g. a loop edge
    makes every proper coloring count zero-by-vacuity rather than well defined)."""


class ResourceError(ColorComplexError, RuntimeError):
    """The computation would exceed a hard resource ceiling (bitmask width,
    enumeration size, arithmetic magnitude)."""
