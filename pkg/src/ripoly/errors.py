"""Exception types shared across the package."""


class RipolyError(Exception):
    """Base class for all package-specific errors."""


class EmptyPolyhedronError(RipolyError):
    """Operation requires a nonempty polyhedron."""


class PointNotInPolyhedronError(RipolyError):
    """The given point is not contained in the polyhedron."""


class UnboundedPolyhedronError(RipolyError):
    """Operation requires a bounded polyhedron."""


class DimensionTooLargeError(RipolyError):
    """Brute-force enumeration guard tripped."""


class UnboundedDirectionError(RipolyError):
    """Objective unbounded below on the restriction to a search direction."""


class NotOptimalError(RipolyError):
    """LP outcome is not OPTIMAL where an optimum is required."""


class ModelTooLargeError(RipolyError):
    """Graphical model exceeds the desk-scale guard."""


class UnknownSuiteError(RipolyError):
    """Unknown verification suite name."""
