"""
Standard modules of the symplectic blob algebra: turn-string bases,
filtration and cellularity, Gram matrices and determinants.
"""

from blobalg.reptheory.cells import (
    check_cellularity,
    filtration_ideals,
    globalise_module,
    periodic_generators,
    weight_of,
)
from blobalg.reptheory.gram import (
    GramReport,
    ScanReport,
    determinant,
    evaluated_rank,
    gram_matrix,
    semisimplicity_scan,
)
from blobalg.reptheory.turnstrings import (
    TurnString,
    dimension,
    restrict_to_blob,
    standard_basis,
    weights,
)

__all__ = [
    "check_cellularity",
    "filtration_ideals",
    "globalise_module",
    "periodic_generators",
    "GramReport",
    "ScanReport",
    "determinant",
    "evaluated_rank",
    "gram_matrix",
    "semisimplicity_scan",
    "TurnString",
    "dimension",
    "restrict_to_blob",
    "standard_basis",
    "weight_of",
    "weights",
]
