"""
Custom exceptions for blobalg.

Provides a hierarchy of exceptions for the error conditions raised by
the parameter ring, the diagram calculus, the symplectic blob algebras
and the representation-theory layer.
"""


class BlobAlgError(Exception):
    """Base exception for all blobalg errors."""

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


# =============================================================================
# Parameter Ring Errors
# =============================================================================

class ParamRingError(BlobAlgError):
    """Base exception for Laurent polynomial errors."""
    pass


class ZeroDenominatorError(ParamRingError):
    """Raised when a negative power of a parameter is evaluated at zero."""

    def __init__(self, param: str):
        super().__init__(
            f"Parameter '{param}' appears with a negative exponent but evaluates to 0",
            {"param": param}
        )


class UnboundParameterError(ParamRingError):
    """Raised when evaluation meets a parameter with no value."""

    def __init__(self, param: str):
        super().__init__(
            f"No value supplied for parameter '{param}'",
            {"param": param}
        )


class UnknownParameterError(ParamRingError):
    """Raised when a parameter name or alias is not recognised."""

    def __init__(self, name: str):
        super().__init__(
            f"Unknown parameter '{name}'",
            {"name": name}
        )


class PolynomialParseError(ParamRingError):
    """Raised when polynomial text cannot be parsed."""

    def __init__(self, text: str, reason: str):
        super().__init__(
            f"Cannot parse polynomial '{text}': {reason}",
            {"text": text, "reason": reason}
        )


# =============================================================================
# Diagram Errors
# =============================================================================

class DiagramError(BlobAlgError):
    """Base exception for diagram calculus errors."""
    pass


class RankMismatchError(DiagramError):
    """Raised when two diagrams cannot be concatenated."""

    def __init__(self, south: int, north: int):
        super().__init__(
            f"Cannot stack a diagram with {south} southern vertices on one with {north} northern",
            {"south": south, "north": north}
        )


class InvalidDiagramError(DiagramError):
    """Raised when diagram data does not describe a valid diagram."""

    def __init__(self, reason: str, details: dict | None = None):
        super().__init__(f"Invalid diagram: {reason}", details or {"reason": reason})


class UnknownLoopClassError(DiagramError):
    """Raised when a loop class has no reduction rule."""

    def __init__(self, loop: str):
        super().__init__(
            f"No rule for loop class '{loop or '∅'}'",
            {"loop": loop}
        )


class NotPlanarError(DiagramError):
    """Raised when an operation requires a planar diagram."""

    def __init__(self, diagram: str):
        super().__init__(
            "Diagram is not planar",
            {"diagram": diagram}
        )


class UnsupportedFamilyError(DiagramError):
    """Raised for an unknown algebra family or invalid family arguments."""

    def __init__(self, family: str, reason: str = "unsupported family"):
        super().__init__(
            f"Family '{family}': {reason}",
            {"family": family, "reason": reason}
        )


# =============================================================================
# Symplectic Errors
# =============================================================================

class SymplecticError(BlobAlgError):
    """Base exception for symplectic blob algebra errors."""
    pass


class NotCCError(SymplecticError):
    """Raised when a periodic diagram is not colouring composable."""

    def __init__(self, wall: str, crossings: int):
        super().__init__(
            f"Diagram is not colouring composable: {crossings} crossings of wall {wall}",
            {"wall": wall, "crossings": crossings}
        )


class NotInIdempotentSubalgebraError(SymplecticError):
    """Raised when localising a diagram that lacks the boundary cup and cap."""

    def __init__(self, diagram: str, reason: str):
        super().__init__(
            f"Diagram is outside the idempotent subalgebra: {reason}",
            {"diagram": diagram, "reason": reason}
        )


# =============================================================================
# Representation Theory Errors
# =============================================================================

class RepTheoryError(BlobAlgError):
    """Base exception for standard-module computations."""
    pass


class WeightOutOfRangeError(RepTheoryError):
    """Raised when a weight lies outside the index set."""

    def __init__(self, m: int, weight: int):
        super().__init__(
            f"Weight {weight} is not in the index set for m={m}",
            {"m": m, "weight": weight}
        )


class ZeroParameterError(RepTheoryError):
    """Raised when a scan point sets a parameter to zero."""

    def __init__(self, params: list[str]):
        super().__init__(
            f"Parameters must be nonzero: {', '.join(params)}",
            {"params": params}
        )


# =============================================================================
# Configuration Errors
# =============================================================================

class ConfigError(BlobAlgError):
    """Base exception for configuration errors."""
    pass


class RankLimitError(ConfigError):
    """Raised when a requested rank exceeds the configured guard."""

    def __init__(self, rank: int, limit: int):
        super().__init__(
            f"Rank {rank} exceeds BLOBALG_MAX_RANK={limit}",
            {"rank": rank, "limit": limit}
        )


class SuiteProfileError(ConfigError):
    """Raised when a suite profile cannot be read or validated."""

    def __init__(self, path: str, errors: list[str]):
        super().__init__(
            f"Invalid suite profile '{path}': {'; '.join(errors)}",
            {"path": path, "errors": errors}
        )


class UnknownSuiteError(ConfigError):
    """Raised when a verification suite name is not registered."""

    def __init__(self, name: str, available: list[str]):
        super().__init__(
            f"Unknown suite '{name}'",
            {"name": name, "available": available}
        )
