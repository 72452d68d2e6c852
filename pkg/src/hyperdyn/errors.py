"""Exception types shared across hyperdyn."""

from __future__ import annotations


class HyperdynError(Exception):
    """Base class for all hyperdyn errors."""


class DuplicateEdgeId(HyperdynError):
    pass


class DisconnectedGraph(HyperdynError):
    pass


class NotATree(HyperdynError):
    pass


class ValidationError(HyperdynError):
    """A structural invariant failed (map continuity, continuum connectivity, ...)."""


class ParseError(HyperdynError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PieceExplosion(HyperdynError):
    """Materializing an iterated map exceeded the piece-count cap."""


class ResourceCap(HyperdynError):
    """A continuum or orbit exceeded a configured resource cap."""


class CombinatorialBlowup(HyperdynError):
    """An exhaustive search exceeded its configured candidate cap."""
