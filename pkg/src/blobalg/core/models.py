"""
Pydantic models for blobalg.

Wire formats for diagrams, periodic diagrams, algebra elements, Gram
reports, dimension tables and verification results, with validation.
"""

import re
from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, field_validator, model_validator


_VERTEX = re.compile(r"^[1-9]\d*p?$")


# =============================================================================
# Enums
# =============================================================================

class FamilyName(str, Enum):
    """Diagram algebra families with an enumerable basis."""
    TL = "tl"
    BLOB = "blob"
    CONTOUR = "contour"
    X = "x"
    PERIODIC = "periodic"


class OutputFormat(str, Enum):
    """Output format for CLI commands and exports."""
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class SuiteName(str, Enum):
    """Named verification suites."""
    PRESENTATION = "presentation"
    CONFLUENCE = "confluence"
    FOLD_ROUNDTRIP = "fold-roundtrip"
    CELLULARITY = "cellularity"
    DIMS = "dims"
    GRAM_IDENTITIES = "gram-paper-identities"
    LOCALISATION = "localisation"
    RESTRICTION = "restriction"
    GENERATION = "generation"


# =============================================================================
# Diagram Models
# =============================================================================

class PairModel(BaseModel):
    """One line of a diagram: two vertex labels and a bead word."""

    ends: list[str] = Field(min_length=2, max_length=2, description="Vertex labels, e.g. ['1', '3p']")
    word: str = Field(default="", description="Beads read in the canonical direction")

    @field_validator("ends")
    @classmethod
    def validate_ends(cls, v: list[str]) -> list[str]:
        for label in v:
            if not _VERTEX.match(label):
                raise ValueError(f"Vertex label must look like '3' or '3p', got '{label}'")
        return v


class DiagramModel(BaseModel):
    """Decorated pair partition with optional closed loops."""

    n: int = Field(ge=0, description="Northern vertex count")
    m: int = Field(ge=0, description="Southern vertex count")
    pairs: list[PairModel] = Field(default_factory=list, description="Lines ordered by least end")
    loops: list[str] = Field(default_factory=list, description="Canonical loop-class words")

    @model_validator(mode="after")
    def check_matching(self) -> "DiagramModel":
        if (self.n + self.m) % 2:
            raise ValueError("n + m must be even")
        if len(self.pairs) * 2 != self.n + self.m:
            raise ValueError("pairs must cover every vertex exactly once")
        return self


class WallLineModel(BaseModel):
    """A line of a periodic diagram in its folded wall form."""

    ends: list[str] = Field(
        min_length=2,
        max_length=2,
        description="Endpoints: '3' north, '3p' south, 'w0:2' / 'w1:0' wall contacts",
    )


class PeriodicDiagramModel(BaseModel):
    """Periodic symmetric diagram stored by its fundamental domain."""

    m: int = Field(ge=0, description="Half period")
    wall0: int = Field(ge=0, description="Number of 0-wall crossings")
    wall1: int = Field(ge=0, description="Number of 1-wall crossings")
    belts: int = Field(ge=0, description="Noncontractible loops")
    lines: list[WallLineModel] = Field(default_factory=list)

    @field_validator("wall0", "wall1")
    @classmethod
    def validate_even(cls, v: int) -> int:
        if v % 2:
            raise ValueError("Wall crossing counts must be even")
        return v


# =============================================================================
# Element and Report Models
# =============================================================================

class TermModel(BaseModel):
    """A coefficient attached to a basis diagram."""

    coefficient: str = Field(description="Polynomial in text format")
    diagram: DiagramModel


class ElementModel(BaseModel):
    """Finite formal sum of basis diagrams."""

    terms: list[TermModel] = Field(default_factory=list)


class FactorModel(BaseModel):
    """One factor of a catalogue factorisation."""

    factor: str
    multiplicity: int = Field(ge=1)


class GramReportModel(BaseModel):
    """Gram matrix, determinant and factorisation for one standard module."""

    m: int = Field(ge=0)
    weight: int
    dimension: int = Field(ge=0)
    basis: list[str] = Field(description="Turn strings in basis order")
    matrix: list[list[str]] = Field(description="Entries in polynomial text format")
    determinant: str
    factors: list[FactorModel] = Field(default_factory=list)
    remainder: str = "1"


class DimensionRowModel(BaseModel):
    """Standard module dimensions for one rank."""

    m: int = Field(ge=0)
    dims: dict[int, int] = Field(description="Weight -> dimension")
    total: int = Field(ge=0, description="Sum of squared dimensions")


class SuiteResultModel(BaseModel):
    """Outcome of a named verification suite."""

    name: SuiteName
    passed: bool
    checks: int = Field(ge=0)
    failures: list[str] = Field(default_factory=list)
    elapsed: float = Field(ge=0.0, description="Wall time in seconds")
    detail: Optional[str] = None


# =============================================================================
# Suite Profiles
# =============================================================================

class SuiteSettingsModel(BaseModel):
    """Bounds for one verification suite."""

    max_rank: int = Field(ge=0, le=8, description="Largest rank the suite visits")
    trials: Optional[int] = Field(default=None, ge=1, description="Random samples, where used")


class SuiteProfileModel(BaseModel):
    """A YAML suite profile: suite name -> settings."""

    suites: dict[str, SuiteSettingsModel] = Field(default_factory=dict)
