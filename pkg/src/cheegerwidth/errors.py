"""Exceptions raised by the geometry, Cheeger and verification routines."""


class GeometryError(ValueError):
    """Base class for all input errors raised by this package."""


class DegenerateInput(GeometryError):
    """The point set has no interior (fewer than 3 hull vertices or zero area)."""


class NegativeOffset(GeometryError):
    """An inner parallel set was requested at a negative distance."""


class OffsetBeyondInradius(GeometryError):
    """The requested offset exceeds the inradius of the polygon."""


class ParamOutOfRange(GeometryError):
    """A family or solver parameter lies outside its admissible range."""
