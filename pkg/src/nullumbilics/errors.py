"""Shared exception types."""


class GeometryError(Exception):
    """Base class for geometric failures."""


class DomainError(GeometryError):
    """Evaluation point lies outside a host's chart domain."""


class DegeneracyError(GeometryError):
    """Degenerate configuration: non-spacelike metric, vanishing immersion
    factor, or a rank-deficient frame system."""


class ConsistencyError(GeometryError):
    """An internal cross-check between mutually dependent quantities failed."""


class JetDomainError(GeometryError):
    """Jet arithmetic hit a domain violation (zero divisor or negative
    radicand in the value slot)."""
