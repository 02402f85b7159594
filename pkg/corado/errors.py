"""Exception hierarchy for matroid constructions and spec parsing."""

from __future__ import annotations


class MatroidError(Exception):
    """Base class for every domain error raised by corado."""


class ConfigError(MatroidError):
    pass


# ---------------------------------------------------------------------------
# Ground sets and subsets
# ---------------------------------------------------------------------------


class GroundTooLarge(MatroidError):
    def __init__(self, size: int, cap: int) -> None:
        super().__init__(f"ground set has {size} elements, cap is {cap} (set CORADO_MAX_GROUND to raise it)")
        self.size = size
        self.cap = cap


class DuplicateLabel(MatroidError):
    pass


class ReservedLabel(MatroidError):
    pass


class NotASubset(MatroidError):
    pass


class GroundSetMismatch(MatroidError):
    pass


class GroundSetsOverlap(MatroidError):
    pass


class NotABijection(MatroidError):
    pass


# ---------------------------------------------------------------------------
# Basis families
# ---------------------------------------------------------------------------


class EmptyFamily(MatroidError):
    pass


class UnequalCardinalities(MatroidError):
    pass


class ExchangeAxiomViolation(MatroidError):
    """Raised with a witness: bases ``b1``, ``b2`` and ``e`` in b1 - b2 with no valid exchange."""

    def __init__(self, message: str, b1: frozenset[str], b2: frozenset[str], element: str) -> None:
        super().__init__(message)
        self.b1 = b1
        self.b2 = b2
        self.element = element


class RankOutOfRange(MatroidError):
    pass


class DuplicateEdgeLabel(MatroidError):
    pass


class EmptySupport(MatroidError):
    pass


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


class EmptyFlat(MatroidError):
    pass


class RankZeroFlat(MatroidError):
    pass


class EmptyMember(MatroidError):
    pass


class LoopyMatroid(MatroidError):
    pass


LoopyInput = LoopyMatroid


class DegreeTooLarge(MatroidError):
    pass


class RankMismatch(MatroidError):
    pass


class InvalidMonomial(MatroidError):
    pass


class InternalInconsistency(MatroidError):
    pass


class SearchTooLarge(MatroidError):
    pass


class NotABergmanFan(MatroidError):
    pass


# ---------------------------------------------------------------------------
# Spec formats
# ---------------------------------------------------------------------------


class SpecError(MatroidError):
    pass


class JsonSyntax(SpecError):
    def __init__(self, msg: str, line: int, col: int) -> None:
        super().__init__(f"invalid JSON at line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


class UnknownType(SpecError):
    pass


class ValidationFailed(SpecError):
    def __init__(self, inner: MatroidError, where: str = "") -> None:
        prefix = f"{where}: " if where else ""
        super().__init__(f"{prefix}{type(inner).__name__}: {inner}")
        self.inner = inner
        self.where = where
